"""Maximal value, frequency, maximizing-radius set, and auxiliary approximants.

The maximal value M f(x) is the supremum of the window averages A_r f(x)
over all radii r > 0; the frequency T f(x) is the infimum of the set of
maximizing radii, taken as 0 when the local limit already attains the
supremum. On every profile segment the average is monotone or constant,
so the supremum is attained at a cut radius or equals the small-radius
constant, and both quantities are computed exactly by a finite scan.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .profile import Profile, build_profile, local_limit, segment_bounds
from .rational import Rat, as_rat, inv_pow2
from .stepfn import StepFn

__all__ = [
    "Attainment",
    "FreqResult",
    "Span",
    "aux_frequency",
    "cut_averages",
    "e_set",
    "frequency",
    "frequency_from_profile",
    "maximal",
]


class Attainment(enum.Enum):
    """How the supremum is realized.

    For step functions the maximizing set is never empty: the first
    profile segment is constant, so when the local limit attains the
    supremum the whole segment does (ZERO_BY_LOCAL_LIMIT), and otherwise
    the infimum is the least maximizing cut radius (ATTAINED). The
    identically zero function gets its own tag.
    """

    ZERO_FUNCTION = "zero_function"
    ZERO_BY_LOCAL_LIMIT = "zero_by_local_limit"
    ATTAINED = "attained"


@dataclass(frozen=True)
class FreqResult:
    maximal: Rat
    frequency: Rat
    status: Attainment
    witness: Rat | None
    argmax_cuts: tuple[Rat, ...]


class Span(NamedTuple):
    """One component of a radius set: an interval or a single point.

    hi None means unbounded above. A point is lo == hi with both ends
    closed.
    """

    lo: Rat
    hi: Rat | None
    lo_closed: bool
    hi_closed: bool

    @property
    def is_point(self) -> bool:
        return self.hi is not None and self.lo == self.hi


def cut_averages(profile: Profile) -> list[tuple[Rat, Rat]]:
    """(radius, average) at every cut, from the segment left of each cut."""
    out = []
    for i, d in enumerate(profile.cuts):
        alpha, beta = profile.segments[i]
        out.append((d, (alpha + beta * d) / (2 * d)))
    return out


def frequency_from_profile(profile: Profile) -> FreqResult:
    if not profile.cuts:
        zero = Rat(0)
        return FreqResult(zero, zero, Attainment.ZERO_FUNCTION, None, ())
    c0 = local_limit(profile)
    pairs = cut_averages(profile)
    top = max(c0, max(a for _, a in pairs))
    argmax = tuple(d for d, a in pairs if a == top)
    if c0 == top:
        return FreqResult(top, Rat(0), Attainment.ZERO_BY_LOCAL_LIMIT, None, argmax)
    witness = argmax[0]
    return FreqResult(top, witness, Attainment.ATTAINED, witness, argmax)


def frequency(f: StepFn, x) -> FreqResult:
    """Exact maximal value and frequency of f at x, with attainment data."""
    return frequency_from_profile(build_profile(f, x))


def maximal(f: StepFn, x) -> Rat:
    """Exact supremum of the window averages of f at x."""
    return frequency(f, x).maximal


def e_set(f: StepFn, x) -> tuple[Span, ...]:
    """The exact set of maximizing radii, as disjoint points and intervals.

    Each profile segment contributes nothing, an endpoint, or its whole
    range (when constant at the maximal value); adjacent contributions are
    merged. The infimum of the returned set equals the frequency.
    """
    profile = build_profile(f, as_rat(x))
    result = frequency_from_profile(profile)
    if result.status is Attainment.ZERO_FUNCTION:
        return (Span(Rat(0), None, False, False),)
    top = result.maximal
    spans: list[list] = []
    for (alpha, beta), (lo, hi) in zip(profile.segments, segment_bounds(profile)):
        if alpha == 0:
            # constant segment at beta/2; the last segment (beta = 0) is
            # constant only for the zero function, already handled
            if hi is not None and beta / 2 == top:
                spans.append([lo, hi, lo != 0, True])
            continue
        for r in (lo, hi):
            if r is None or r == 0:
                continue
            if (alpha + beta * r) / (2 * r) == top:
                spans.append([r, r, True, True])
    spans.sort(key=lambda s: (s[0], s[1]))
    merged: list[list] = []
    for lo, hi, loc, hic in spans:
        if merged:
            last = merged[-1]
            if lo < last[1] or (lo == last[1] and (last[3] or loc)):
                if hi > last[1]:
                    last[1], last[3] = hi, hic
                elif hi == last[1]:
                    last[3] = last[3] or hic
                continue
        merged.append([lo, hi, loc, hic])
    return tuple(Span(lo, hi, loc, hic) for lo, hi, loc, hic in merged)


def aux_frequency(f: StepFn, x, k: int, l: int) -> Rat:
    """Infimum of {rational r >= 2^-l : A_r f(x) + 2^-k >= M f(x)}, or 0.

    Computed exactly: on each profile segment the qualifying condition is
    a linear inequality in r whose solution there is a closed rational
    interval, so the infimum over rational radii equals the least feasible
    point across segments. A nonpositive threshold means every radius
    qualifies and the cutoff 2^-l itself is the infimum.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive integers")
    profile = build_profile(f, as_rat(x))
    result = frequency_from_profile(profile)
    theta = result.maximal - inv_pow2(k)
    cutoff = inv_pow2(l)
    if theta <= 0:
        return cutoff
    best = None
    for (alpha, beta), (lo, hi) in zip(profile.segments, segment_bounds(profile)):
        seg_lo = lo if lo >= cutoff else cutoff
        if hi is not None and seg_lo > hi:
            continue
        # qualifying <=> alpha + (beta - 2*theta) * r >= 0 on the segment
        slack = beta - 2 * theta
        if slack == 0:
            candidate = seg_lo if alpha >= 0 else None
        elif slack > 0:
            root = -alpha / slack
            candidate = seg_lo if seg_lo >= root else root
            if hi is not None and candidate > hi:
                candidate = None
        else:
            root = -alpha / slack
            candidate = seg_lo if seg_lo <= root else None
        if candidate is not None and (best is None or candidate < best):
            best = candidate
    return best if best is not None else Rat(0)
