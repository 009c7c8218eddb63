"""Measure-level checkers built on the exact engine.

Lebesgue-point classification, certified discontinuities of the maximal
function, grid scans for level-set measures and densities, and the
neighborhood/sequence checks that connect discontinuities of the maximal
function to zeros of the frequency and to non-Lebesgue points.

Measures are estimated by counting grid points and multiplying by the
step; the per-point values themselves are exact, so a grid point's
membership in a level set is never approximate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .freq import frequency, maximal
from .rational import Rat, as_rat, inv_pow2
from .stepfn import StepFn

__all__ = [
    "DiscontinuityCertificate",
    "InvariantViolation",
    "LebesgueClass",
    "ScanReport",
    "band_extent",
    "discontinuities",
    "grid_points",
    "high_side_collapse",
    "lebesgue_classify",
    "level_density",
    "non_lebesgue_witnesses",
    "scan",
    "weak_type_check",
    "zero_frequency_witnesses",
    "zero_set_fraction",
]


class InvariantViolation(AssertionError):
    """A checked inequality or witness search failed on actual data."""


@dataclass(frozen=True)
class LebesgueClass:
    """Verdict at one point: Lebesgue with its constant, or a jump point.

    For step functions the classification is exact: x is a Lebesgue point
    iff the one-sided essential values agree, and then the shrinking
    averages of |f - c| vanish for c equal to that common value.
    """

    point: Rat
    is_lebesgue: bool
    constant: Rat | None


@dataclass(frozen=True)
class DiscontinuityCertificate:
    """A breakpoint where the maximal function provably jumps down.

    side_value > maximal_at certifies that the maximal function exceeds
    maximal_at by at least jump_lower_bound arbitrarily close to the point
    (inside the adjacent piece the local limit equals the side value), so
    the lower semicontinuous maximal function is discontinuous there.
    """

    point: Rat
    maximal_at: Rat
    side_value: Rat
    jump_lower_bound: Rat


@dataclass(frozen=True)
class ScanReport:
    """Grid-scan aggregate over x in [-N, N] with the given step."""

    domain_bound: Rat
    grid_step: Rat
    entries: tuple[tuple[Rat, Rat, Rat], ...]
    aggregates: Mapping[str, Rat] = field(default_factory=dict)


def lebesgue_classify(f: StepFn, x) -> LebesgueClass:
    x = as_rat(x)
    left, right = f.one_sided(x)
    if left == right:
        return LebesgueClass(x, True, left)
    return LebesgueClass(x, False, None)


def discontinuities(f: StepFn) -> tuple[DiscontinuityCertificate, ...]:
    """All certified discontinuities of the maximal function of f.

    A breakpoint b is certified iff max(f(b-), f(b+)) exceeds the maximal
    value at b. Certificates are sound by the adjacent-piece argument; the
    claim that they are also complete for step functions is validated
    empirically by the dense-scan test over the corpus.
    """
    certificates = []
    for b in f.breakpoints():
        side = max(f.one_sided(b))
        at_b = maximal(f, b)
        if side > at_b:
            certificates.append(DiscontinuityCertificate(b, at_b, side, side - at_b))
    return tuple(certificates)


def grid_points(N, step) -> list[Rat]:
    """The scan grid -N, -N+step, ... up to N (inclusive when it lands)."""
    N, step = as_rat(N), as_rat(step)
    if N <= 0 or step <= 0:
        raise ValueError("N and step must be positive")
    count = int((2 * N) / step)
    return [-N + i * step for i in range(count + 1)]


def scan(f: StepFn, N, step) -> ScanReport:
    """Exact maximal value and frequency at every grid point."""
    entries = []
    for x in grid_points(N, step):
        res = frequency(f, x)
        entries.append((x, res.maximal, res.frequency))
    return ScanReport(as_rat(N), as_rat(step), tuple(entries), {"count": Rat(len(entries))})


def band_extent(f: StepFn, C, N, step) -> ScanReport:
    """Scan for the band |x|/(2C) <= T f(x) <= |x|/C and report its reach.

    The band is bounded for every integrable f, so the reported extent
    must stop growing once N passes it; rescanning with doubled N checks
    that empirically.
    """
    C = as_rat(C)
    if C <= 1:
        raise ValueError("C must exceed 1")
    entries = []
    extent = Rat(0)
    in_band = 0
    for x in grid_points(N, step):
        res = frequency(f, x)
        entries.append((x, res.maximal, res.frequency))
        ax = abs(x)
        if ax / (2 * C) <= res.frequency <= ax / C:
            in_band += 1
            if ax > extent:
                extent = ax
    aggregates = {"band_extent": extent, "band_count": Rat(in_band)}
    return ScanReport(as_rat(N), as_rat(step), tuple(entries), aggregates)


def level_density(f: StepFn, C, N, step) -> ScanReport:
    """Grid density of {|x| <= N : T f(x) <= |x|/C} relative to N.

    For any f that is not almost everywhere zero the ratio tends to 0 as N
    grows; the identically zero function qualifies everywhere and is the
    reason the hypothesis excludes it.
    """
    C = as_rat(C)
    if C <= 1:
        raise ValueError("C must exceed 1")
    entries = []
    hits = 0
    for x in grid_points(N, step):
        res = frequency(f, x)
        entries.append((x, res.maximal, res.frequency))
        if res.frequency <= abs(x) / C:
            hits += 1
    N, step = as_rat(N), as_rat(step)
    measure = step * hits
    aggregates = {"measure": measure, "density": measure / N, "count": Rat(hits)}
    return ScanReport(N, step, tuple(entries), aggregates)


def zero_set_fraction(f: StepFn, N, step) -> ScanReport:
    """Grid measure of {|x| <= N : T f(x) = 0}; zero is decided exactly."""
    entries = []
    hits = 0
    for x in grid_points(N, step):
        res = frequency(f, x)
        entries.append((x, res.maximal, res.frequency))
        if res.frequency == 0:
            hits += 1
    N, step = as_rat(N), as_rat(step)
    measure = step * hits
    aggregates = {"measure": measure, "zero_fraction": measure / (2 * N), "count": Rat(hits)}
    return ScanReport(N, step, tuple(entries), aggregates)


def weak_type_check(f: StepFn, lam, N, step) -> tuple[Rat, Rat]:
    """Grid estimate of |{|x| <= N : M f(x) > lam}| against 3*mass/lam.

    Returns (estimated_measure, bound) and raises InvariantViolation if
    the estimate exceeds the bound by more than the grid slack of two
    steps per boundary crossing.
    """
    lam = as_rat(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    flags = [maximal(f, x) > lam for x in grid_points(N, step)]
    step = as_rat(step)
    estimated = step * sum(flags)
    bound = 3 * f.mass() / lam
    crossings = sum(1 for a, b in zip(flags, flags[1:]) if a != b)
    if estimated > bound + 2 * step * crossings:
        raise InvariantViolation(
            f"weak-type estimate {estimated} exceeds bound {bound} plus slack"
        )
    return estimated, bound


def _certificate_at(f: StepFn, b) -> DiscontinuityCertificate:
    b = as_rat(b)
    if b in f.breakpoints():
        side = max(f.one_sided(b))
        at_b = maximal(f, b)
        if side > at_b:
            return DiscontinuityCertificate(b, at_b, side, side - at_b)
    raise ValueError(f"{b} is not a certified discontinuity of the maximal function")


def _high_side(f: StepFn, b) -> int:
    left, right = f.one_sided(b)
    return -1 if left >= right else 1


def zero_frequency_witnesses(
    f: StepFn, b, radii: Sequence, max_depth: int = 48
) -> list[tuple[Rat, Rat | None]]:
    """For each radius, a point y in (b-r, b+r) with T f(y) = 0 exactly.

    b must be a certified discontinuity. The first candidate sits halfway
    into the adjacent piece on the high side (clipped to the radius);
    after that, candidates descend dyadically from each side of b, high
    side first. A None witness means the search failed, which the caller
    treats as a test failure, not an error.
    """
    _certificate_at(f, b)
    b = as_rat(b)
    high = _high_side(f, b)
    events = f.breakpoints()
    index = events.index(b)
    neighbor = events[index + 1] if high > 0 else events[index - 1]
    width = abs(neighbor - b)
    out: list[tuple[Rat, Rat | None]] = []
    for r in radii:
        r = as_rat(r)
        witness = None
        first = b + high * min(r, width) / 2
        if frequency(f, first).frequency == 0:
            witness = first
        else:
            for depth in range(1, max_depth + 1):
                offset = r * inv_pow2(depth)
                for side in (high, -high):
                    y = b + side * offset
                    if frequency(f, y).frequency == 0:
                        witness = y
                        break
                if witness is not None:
                    break
        out.append((r, witness))
    return out


def non_lebesgue_witnesses(f: StepFn, b, radii: Sequence) -> list[tuple[Rat, Rat]]:
    """For each radius, a non-Lebesgue point of f inside (b-r, b+r).

    For a finite step function every certified discontinuity is itself a
    jump breakpoint, so the point b answers every radius.
    """
    _certificate_at(f, b)
    b = as_rat(b)
    if lebesgue_classify(f, b).is_lebesgue:
        raise InvariantViolation(f"certified point {b} classifies as a Lebesgue point")
    return [(as_rat(r), b) for r in radii]


def high_side_collapse(
    f: StepFn, b, eps=None, n_max: int = 20
) -> list[tuple[Rat, Rat]]:
    """Points x_n -> b with M f(x_n) >= M f(b) + eps, and their frequencies.

    The x_n stay inside the adjacent piece on the high side of a certified
    discontinuity, so the maximal-value condition is guaranteed as long as
    eps does not exceed the certificate's jump bound. The returned
    frequencies cannot stay bounded below by a positive constant; tests
    assert the suffix minima sink accordingly.
    """
    cert = _certificate_at(f, b)
    b = as_rat(b)
    eps = cert.jump_lower_bound / 2 if eps is None else as_rat(eps)
    if not 0 < eps <= cert.jump_lower_bound:
        raise ValueError("eps must lie in (0, jump_lower_bound] to be verifiable")
    side = _high_side(f, b)
    events = f.breakpoints()
    index = events.index(b)
    neighbor = events[index + 1] if side > 0 else events[index - 1]
    unit = min(abs(neighbor - b), Rat(1))
    out = []
    for n in range(1, n_max + 1):
        y = b + side * unit * inv_pow2(n)
        res = frequency(f, y)
        if res.maximal < cert.maximal_at + eps:
            raise InvariantViolation(
                f"approach point {y} has maximal value below the certified excess"
            )
        out.append((y, res.frequency))
    return out
