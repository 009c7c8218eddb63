"""Brute-force radius-grid approximation of the maximal value and frequency.

The oracle exists to validate the profile-based engine, so it deliberately
shares only integration and pointwise queries with it: no profile
segments, no cut-radius argmax logic. It samples the window average on a
dense radius grid and reports a certified error bound derived from two
facts that need no segment structure: the window integral is nondecreasing
in the radius, and the average over any window is at most the mean of the
one-sided essential sups over the swept spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import Rat, as_rat
from .stepfn import StepFn

__all__ = ["OracleResult", "oracle_eval"]


@dataclass(frozen=True)
class OracleResult:
    approx_maximal: Rat
    approx_frequency: Rat
    r_max: Rat
    grid_count: int
    error_bound: Rat


def oracle_eval(f: StepFn, x, r_max, grid_count: int) -> OracleResult:
    """Grid approximation with a certified one-sided error bound.

    Evaluates A_r at r = j*r_max/grid_count for j = 1..grid_count plus the
    small-radius constant, so approx_maximal never exceeds the exact
    supremum, while exact supremum <= approx_maximal + error_bound is
    certified. approx_frequency is the smallest grid radius whose average
    is within error_bound of the grid maximum (0 when the small-radius
    constant is), which keeps it conservative. r_max must reach past the
    farthest breakpoint so no mass lies beyond the sampled range.
    """
    x, r_max = as_rat(x), as_rat(r_max)
    if grid_count < 2:
        raise ValueError("grid_count must be at least 2")
    if r_max <= 0:
        raise ValueError("r_max must be positive")
    zero = Rat(0)
    if f.is_zero:
        return OracleResult(zero, zero, r_max, grid_count, zero)
    farthest = max(abs(e - x) for e in f.breakpoints())
    if r_max < farthest:
        raise ValueError("r_max must reach past the farthest breakpoint distance")

    step = r_max / grid_count
    radii = [step * j for j in range(1, grid_count + 1)]
    integrals = [f.integrate(x - r, x + r) for r in radii]
    averages = [window / (2 * r) for window, r in zip(integrals, radii)]
    left_v, right_v = f.one_sided(x)
    c0 = (left_v + right_v) / 2
    grid_max = max(c0, max(averages))

    # certified slack over (0, r_1]: averages there never exceed the mean
    # of the one-sided sups over the first spans
    slack = (f.sup_on(x - step, x) + f.sup_on(x, x + step)) / 2 - grid_max
    for j in range(grid_count - 1):
        a, b = radii[j], radii[j + 1]
        window_cap = integrals[j + 1] / (2 * a)
        sweep_cap = (f.sup_on(x - b, x - a) + f.sup_on(x + a, x + b)) / 2
        if averages[j] > sweep_cap:
            sweep_cap = averages[j]
        cap = window_cap if window_cap < sweep_cap else sweep_cap
        gap = cap - grid_max
        if gap > slack:
            slack = gap
    error_bound = slack if slack > 0 else zero

    threshold = grid_max - error_bound
    if c0 >= threshold:
        approx_frequency = zero
    else:
        approx_frequency = next(r for r, a in zip(radii, averages) if a >= threshold)
    return OracleResult(grid_max, approx_frequency, r_max, grid_count, error_bound)
