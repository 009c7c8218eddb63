"""Exact radius profiles: the map r -> average of f over [x-r, x+r].

For a step function f and a fixed center x, the window integral
I(r) = integral of f over [x-r, x+r] is piecewise affine in r: its slope
only changes when a window endpoint sweeps across a breakpoint of f, i.e.
at the distances from x to the breakpoints. Each profile segment stores
the affine form I(r) = alpha + beta*r, so the average A_r = (alpha +
beta*r)/(2r) is monotone or constant on every segment and all argmax
questions reduce to finite endpoint scans.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .rational import Rat, as_rat
from .stepfn import StepFn

__all__ = [
    "Profile",
    "build_profile",
    "check_profile_invariants",
    "continuity_certificate",
    "eval_average",
    "local_limit",
    "segment_bounds",
]


@dataclass(frozen=True)
class Profile:
    """Piecewise description of r -> A_r f(x) for one center x.

    cuts are the distinct positive distances d_1 < ... < d_n from x to the
    breakpoints of f. segments[i] = (alpha, beta) gives the window integral
    alpha + beta*r on the i-th radius range: (0, d_1] for i = 0, [d_i,
    d_i+1] in between, and [d_n, infinity) for the last, where beta = 0 and
    alpha is the total mass. The zero function yields a single all-zero
    segment covering (0, infinity).
    """

    center: Rat
    cuts: tuple[Rat, ...]
    segments: tuple[tuple[Rat, Rat], ...]
    tail_mass: Rat


def build_profile(f: StepFn, x) -> Profile:
    """Construct the exact profile of f at center x.

    Left/right breakpoints at equal distance are deduplicated; each
    segment's slope is read off the function values swept by the two
    window endpoints at the segment midpoint, and the intercepts follow
    from accumulating the window integral across the cuts.
    """
    x = as_rat(x)
    distances = {abs(e - x) for e in f.breakpoints()}
    distances.discard(Rat(0))
    cuts = sorted(distances)

    segments: list[tuple[Rat, Rat]] = []
    integral = Rat(0)
    lo = Rat(0)
    for d in cuts:
        mid = (lo + d) / 2
        slope = f.value_at(x + mid) + f.value_at(x - mid)
        segments.append((integral - slope * lo, slope))
        integral += slope * (d - lo)
        lo = d
    segments.append((integral, Rat(0)))
    assert integral == f.mass()
    return Profile(center=x, cuts=tuple(cuts), segments=tuple(segments), tail_mass=f.mass())


def eval_average(profile: Profile, r) -> Rat:
    """Exact A_r f(x) from the stored segment forms; requires r > 0."""
    r = as_rat(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    alpha, beta = profile.segments[bisect_left(profile.cuts, r)]
    return (alpha + beta * r) / (2 * r)


def local_limit(profile: Profile) -> Rat:
    """Limit of A_r f(x) as r -> 0+, the mean of the two one-sided values."""
    return profile.segments[0][1] / 2


def segment_bounds(profile: Profile) -> list[tuple[Rat, Rat | None]]:
    """Radius range (lo, hi) of each segment; hi is None for the last."""
    cuts = profile.cuts
    bounds: list[tuple[Rat, Rat | None]] = []
    lo = Rat(0)
    for d in cuts:
        bounds.append((lo, d))
        lo = d
    bounds.append((lo, None))
    return bounds


def continuity_certificate(profile: Profile) -> bool:
    """Adjacent segment forms agree exactly at every shared cut."""
    for i, d in enumerate(profile.cuts):
        a0, b0 = profile.segments[i]
        a1, b1 = profile.segments[i + 1]
        if a0 + b0 * d != a1 + b1 * d:
            return False
    return True


def check_profile_invariants(profile: Profile, f: StepFn) -> None:
    """Cross-validate a profile against direct integration of f.

    Re-derives every segment from two interior integrals, independent of
    how the profile was built, and checks the structural invariants:
    alpha_0 = 0, final segment (mass, 0), nonnegativity, the mass bound,
    and exact continuity across cuts. Raises AssertionError on any defect.
    """
    x = profile.center
    mass = f.mass()
    assert len(profile.segments) == len(profile.cuts) + 1
    assert profile.tail_mass == mass
    assert profile.segments[0][0] == 0
    assert profile.segments[-1] == (mass, Rat(0))
    for (alpha, beta), (lo, hi) in zip(profile.segments, segment_bounds(profile)):
        if hi is None:
            probes = (lo + 1, lo + 2)
        else:
            width = hi - lo
            probes = (lo + width / 3, lo + 2 * width / 3)
        for r in probes:
            window = alpha + beta * r
            assert window == f.integrate(x - r, x + r)
            assert 0 <= window <= mass
    assert continuity_certificate(profile)
