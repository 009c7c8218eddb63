import pytest

from freqfn import (
    CorpusSpec,
    closed_form_frequency,
    closed_form_maximal,
    frequency,
    generate,
    maximal,
    oracle_eval,
)
from freqfn.corpus import f9_points, sparse_markers
from freqfn.rational import Rat, inv_pow2


class TestGenerate:
    def test_f1_zero(self):
        assert generate("f1").is_zero

    def test_f2(self):
        assert generate("f2").pieces == ((-1, 1, 1),)

    def test_f3_default_starts_at_one(self):
        f = generate("f3", K=4)
        assert [tuple(p) for p in f.pieces] == [
            (2, 3, 1),
            (4, 5, Rat(1, 4)),
            (8, 9, Rat(1, 9)),
            (16, 17, Rat(1, 16)),
        ]

    def test_f3_n_min(self):
        f = generate("f3", K=12, n_min=10)
        assert f.pieces[0].left == 2**10
        assert len(f.pieces) == 3

    def test_f4_scaled_indicator(self):
        f = generate("f4", k=4)
        assert f.pieces == ((-1, 1, Rat(1, 4)),)
        assert f.mass() == Rat(1, 2)

    def test_f5_bumps(self):
        f = generate("f5", K=3)
        assert [tuple(p) for p in f.pieces] == [
            (-1, 0, 1),
            (Rat(3, 16), Rat(1, 4), 1),
            (Rat(3, 8), Rat(1, 2), 1),
            (Rat(3, 4), 1, 1),
        ]

    def test_f7(self):
        assert [tuple(p) for p in generate("f7").pieces] == [(-1, 0, 1), (1, 2, 100)]

    def test_f8_bumps(self):
        f = generate("f8", K=2)
        assert [tuple(p) for p in f.pieces] == [
            (Rat(7, 32), Rat(1, 4), 1),
            (Rat(3, 8), Rat(1, 2), 1),
        ]

    def test_f9_jump_sequence(self):
        a, b = f9_points(4)
        assert a[:5] == [0, 1, Rat(3, 2), Rat(13, 8), Rat(13, 8) + Rat(1, 64)]
        assert b[0] == Rat(1, 2)
        f = generate("f9", K=4)
        # right halves, with the final half merged into the unit piece at a*
        a_star = a[5]
        assert f.pieces[0] == (Rat(1, 2), 1, 1)
        assert f.pieces[-1] == (b[4], a_star + 1, 1)

    def test_spec_object_equivalent(self):
        assert generate(CorpusSpec("f5", {"K": 6})) == generate("f5", K=6)
        with pytest.raises(TypeError):
            generate(CorpusSpec("f5", {"K": 6}), K=7)

    def test_unknown_id(self):
        with pytest.raises(ValueError):
            generate("f6")

    @pytest.mark.parametrize(
        "fid,params",
        [
            ("f3", {"K": 0}),
            ("f3", {"K": 4, "n_min": 5}),
            ("f4", {"k": 0}),
            ("f5", {}),
            ("sparse", {"eps": Rat(3, 2), "M_max": 100}),
            ("sparse", {"eps": Rat(1, 2), "M_max": 9}),
        ],
    )
    def test_invalid_params(self, fid, params):
        with pytest.raises(ValueError):
            generate(fid, **params)


class TestSparseConstruction:
    def test_markers_have_dyadic_denominators(self):
        height, left = sparse_markers(17, Rat(1, 2))
        assert 2**40 % height.denominator == 0
        assert 2**40 % left.denominator == 0

    def test_pieces_are_unit_length_and_sparse(self):
        f = generate("sparse", eps=Rat(1, 2), M_max=30)
        assert len(f.pieces) == 21
        for piece, nxt in zip(f.pieces, f.pieces[1:]):
            assert piece.right - piece.left == 1
            assert nxt.left > piece.right + 1

    def test_heights_decrease(self):
        f = generate("sparse", eps=Rat(1, 2), M_max=40)
        values = [p.value for p in f.pieces]
        assert all(a > b for a, b in zip(values, values[1:]))


class TestClosedForms:
    def test_maximal_f2(self):
        assert closed_form_maximal("f2", 2) == Rat(1, 3)
        assert closed_form_maximal("f2", Rat(1, 2)) == 1
        assert closed_form_maximal("f2", -1) == Rat(1, 2)

    def test_maximal_f4(self):
        assert closed_form_maximal("f4", 2, k=7) == Rat(1, 21)
        with pytest.raises(ValueError):
            closed_form_maximal("f4", 2)

    def test_frequency_f2_f4(self):
        assert closed_form_frequency("f2", 2) == 3
        assert closed_form_frequency("f2", Rat(1, 2)) == 0
        assert closed_form_frequency("f4", 2, k=7) == 3

    def test_frequency_f5_special_points(self):
        assert closed_form_frequency("f5", Rat(3, 8)) == Rat(5, 8)
        assert closed_form_frequency("f5", Rat(3, 16)) == Rat(13, 16)
        assert closed_form_frequency("f5", Rat(1, 2)) is None
        assert closed_form_frequency("f5", Rat(3, 4)) is None
        assert closed_form_frequency("f5", Rat(3, 5)) is None

    def test_no_closed_form(self):
        with pytest.raises(ValueError):
            closed_form_maximal("f7", 0)
        with pytest.raises(ValueError):
            closed_form_frequency("f8", 0)


class TestCorpusBehavior:
    def test_engine_matches_closed_forms_on_sparse_grid(self):
        f2 = generate("f2")
        xs = [Rat(i, 4) for i in range(-32, 33)]
        for x in xs:
            res = frequency(f2, x)
            assert res.maximal == closed_form_maximal("f2", x)
            assert res.frequency == closed_form_frequency("f2", x)
        f4 = generate("f4", k=3)
        for x in xs:
            res = frequency(f4, x)
            assert res.maximal == closed_form_maximal("f4", x, k=3)
            assert res.frequency == closed_form_frequency("f4", x, k=3)

    def test_f5_special_points_within_margin(self):
        K = 12
        f5 = generate("f5", K=K)
        for n in range(2, K - 8 + 1):
            x = 3 * inv_pow2(n + 1)
            assert frequency(f5, x).frequency == 1 - x

    def test_f5_special_point_confirmed_by_oracle(self):
        f5 = generate("f5", K=10)
        x = Rat(3, 8)
        res = frequency(f5, x)
        view = oracle_eval(f5, x, 4, 2**12)
        assert view.approx_maximal <= res.maximal <= view.approx_maximal + view.error_bound
        assert abs(view.approx_frequency - res.frequency) <= Rat(4, 2**12) + view.error_bound

    def test_f8_mass_monotone_and_bounded(self):
        masses = [generate("f8", K=K).mass() for K in range(1, 12)]
        assert all(a < b for a, b in zip(masses, masses[1:]))
        assert all(m < Rat(1, 6) for m in masses)

    def test_f5_mass_bounded(self):
        assert generate("f5", K=14).mass() < Rat(3, 2)

    def test_f3_zero_frequency_inside_bumps(self):
        K = 10
        f3 = generate("f3", K=K)
        for n in range(1, K + 1):
            x = Rat(2**n) + Rat(1, 2)
            assert frequency(f3, x).frequency == 0

    def test_f3_zero_frequency_confirmed_by_oracle(self):
        f3 = generate("f3", K=6)
        x = Rat(2**4) + Rat(1, 2)
        exact = frequency(f3, x)
        view = oracle_eval(f3, x, 128, 2**13)
        assert view.approx_maximal <= exact.maximal <= view.approx_maximal + view.error_bound
        assert view.approx_frequency == 0

    def test_sparse_zero_frequency_inside_late_bumps(self):
        f = generate("sparse", eps=Rat(1, 2), M_max=60)
        for piece in f.pieces[-5:]:
            assert frequency(f, piece.left + Rat(1, 2)).frequency == 0
            assert maximal(f, piece.left + Rat(1, 2)) == piece.value
