import random

import pytest
from hypothesis import given

from freqfn import (
    StepFn,
    build_profile,
    check_profile_invariants,
    continuity_certificate,
    eval_average,
    local_limit,
)
from freqfn.profile import segment_bounds
from freqfn.rational import Rat, sample_rationals

from conftest import rationals, step_fns

F2 = StepFn([(-1, 1, 1)])


class TestBuild:
    def test_f2_off_center(self):
        p = build_profile(F2, 2)
        assert p.cuts == (1, 3)
        assert p.segments == ((0, 0), (-1, 1), (2, 0))
        assert p.tail_mass == 2

    def test_f2_symmetric_center(self):
        p = build_profile(F2, 0)
        assert p.cuts == (1,)
        assert p.segments == ((0, 2), (2, 0))

    def test_zero_function(self):
        p = build_profile(StepFn(), 5)
        assert p.cuts == ()
        assert p.segments == ((0, 0),)
        assert eval_average(p, 17) == 0

    def test_equidistant_breakpoints_deduplicated(self):
        # both breakpoints of each piece sit at distances 1 and 2 from 0
        f = StepFn([(-2, -1, 3), (1, 2, 5)])
        p = build_profile(f, 0)
        assert p.cuts == (1, 2)
        check_profile_invariants(p, f)

    @given(step_fns(), rationals(max_den=10))
    def test_invariants_hold(self, f, x):
        check_profile_invariants(build_profile(f, x), f)

    @given(step_fns(), rationals(max_den=10))
    def test_continuity_certificate(self, f, x):
        assert continuity_certificate(build_profile(f, x))


class TestEvalAverage:
    def test_value_at_witness_radius(self):
        assert eval_average(build_profile(F2, 2), 3) == Rat(1, 3)

    def test_unit_window(self):
        assert eval_average(build_profile(F2, 0), 1) == 1

    def test_half_overlap(self):
        assert eval_average(build_profile(F2, Rat(3, 2)), 1) == Rat(1, 4)

    def test_rejects_nonpositive_radius(self):
        p = build_profile(F2, 0)
        with pytest.raises(ValueError):
            eval_average(p, 0)
        with pytest.raises(ValueError):
            eval_average(p, -1)

    def test_matches_direct_integration_on_corpus(self, corpus):
        # 50 centers x 20 radii = 1000 sampled (x, r) pairs per function
        for i, (fid, _, f) in enumerate(corpus):
            rng = random.Random(200 + i)
            bound = f.support_radius() + 2
            for x in sample_rationals(rng, 50, bound):
                profile = build_profile(f, x)
                for r in sample_rationals(rng, 20, bound):
                    r = abs(r) + Rat(1, 64)
                    assert eval_average(profile, r) == f.integrate(x - r, x + r) / (2 * r)

    @given(step_fns(), rationals(max_den=10), rationals(lo=0, hi=8, max_den=10))
    def test_matches_direct_integration_random(self, f, x, r):
        r = r + Rat(1, 16)
        assert eval_average(build_profile(f, x), r) == f.integrate(x - r, x + r) / (2 * r)


class TestSegments:
    def test_segment_count_and_bounds(self):
        p = build_profile(F2, 2)
        assert len(p.segments) == len(p.cuts) + 1
        assert segment_bounds(p) == [(0, 1), (1, 3), (3, None)]

    def test_mass_bound_on_window(self):
        # alpha + beta*r <= mass at every cut (eq-(1)-style bound)
        p = build_profile(F2, Rat(7, 3))
        for (alpha, beta), (lo, hi) in zip(p.segments, segment_bounds(p)):
            for r in (lo, hi):
                if r is not None and r > 0:
                    assert alpha + beta * r <= p.tail_mass

    @given(step_fns(), rationals(max_den=10))
    def test_monotonicity_classified_by_alpha_sign(self, f, x):
        p = build_profile(f, x)
        for (alpha, beta), (lo, hi) in zip(p.segments, segment_bounds(p)):
            width = (hi - lo) if hi is not None else Rat(2)
            r1 = lo + width / 4
            r2 = lo + 3 * width / 4
            a1, a2 = eval_average(p, r1), eval_average(p, r2)
            if alpha == 0:
                assert a1 == a2
            elif alpha > 0:
                assert a1 > a2
            else:
                assert a1 < a2


class TestLocalLimit:
    def test_jump_point_mean(self):
        assert local_limit(build_profile(F2, 1)) == Rat(1, 2)

    def test_interior(self):
        assert local_limit(build_profile(F2, 0)) == 1

    def test_zero_function(self):
        assert local_limit(build_profile(StepFn(), 3)) == 0

    @given(step_fns(), rationals(max_den=10))
    def test_equals_mean_of_one_sided(self, f, x):
        left, right = f.one_sided(x)
        assert local_limit(build_profile(f, x)) == (left + right) / 2
