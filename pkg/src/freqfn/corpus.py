"""Generators for the reference function family used across the test bench.

All generators produce canonical StepFn values with finite mass. Infinite
sums are truncated at a level K that each caller states; the sparse
construction rounds its transcendental endpoints to denominator 2^40 once
and treats the rounded function as ground truth from then on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

import mpmath

from .rational import Rat, as_rat
from .stepfn import StepFn

__all__ = [
    "CORPUS_IDS",
    "CorpusSpec",
    "closed_form_frequency",
    "closed_form_maximal",
    "generate",
]

CORPUS_IDS = ("f1", "f2", "f3", "f4", "f5", "f7", "f8", "f9", "sparse")

ROUND_BITS = 40


@dataclass(frozen=True)
class CorpusSpec:
    id: str
    params: Mapping[str, Any] = field(default_factory=dict)


def _truncation(params, default=None) -> int:
    K = params.get("K", default)
    if K is None or int(K) < 1:
        raise ValueError("truncation level K must be a positive integer")
    return int(K)


def _f3(params) -> StepFn:
    K = _truncation(params)
    n_min = int(params.get("n_min", 1))
    if n_min < 1 or n_min > K:
        raise ValueError("need 1 <= n_min <= K")
    return StepFn((Rat(2**n), Rat(2**n) + 1, Rat(1, n * n)) for n in range(n_min, K + 1))


def _f5(params) -> StepFn:
    K = _truncation(params)
    pieces = [(Rat(-1), Rat(0), Rat(1))]
    for n in range(1, K + 1):
        right = Rat(1, 2 ** (n - 1))
        pieces.append((right - Rat(1, 2 ** (n + 1)), right, Rat(1)))
    return StepFn(pieces)


def _f8(params) -> StepFn:
    K = _truncation(params)
    return StepFn(
        (Rat(1, 2**k) - Rat(1, 2 ** (2 * k + 1)), Rat(1, 2**k), Rat(1)) for k in range(1, K + 1)
    )


def f9_points(K: int) -> tuple[list[Rat], list[Rat]]:
    """The jump sequence a_0..a_{K+1} and midpoints b_0..b_K."""
    a = [Rat(0), Rat(1)]
    for k in range(1, K + 1):
        a.append(a[-1] + Rat(1, 2 ** (k * (k + 1) // 2)))
    b = [(a[k] + a[k + 1]) / 2 for k in range(K + 1)]
    return a, b


def _f9(params) -> StepFn:
    K = _truncation(params)
    a, b = f9_points(K)
    a_star = a[K + 1]
    pieces = [(b[k], a[k + 1], Rat(1)) for k in range(K + 1)]
    pieces.append((a_star, a_star + 1, Rat(1)))
    return StepFn(pieces)


def _round_to_dyadic(value: "mpmath.mpf") -> Rat:
    """Round half-even to a rational with denominator 2^ROUND_BITS."""
    scaled = mpmath.nint(value * 2**ROUND_BITS)
    return Rat(int(scaled), 2**ROUND_BITS)


def sparse_markers(m: int, eps) -> tuple[Rat, Rat]:
    """Rounded (height, left endpoint) for bump index m.

    The bump height is 1/(m*log(m)^(1+eps/2)) and its left endpoint is
    m*log(m)^(1+eps); both are rounded half-even to denominator
    2^ROUND_BITS and the rounded values are the ground truth from then
    on. Rounding the height itself (rather than its reciprocal) keeps
    every piece mass on the common denominator 2^ROUND_BITS, so exact
    accumulation over thousands of pieces stays cheap. 60 working digits
    keep the rounding error far below half an ulp of the target grid.
    """
    eps = as_rat(eps)
    e1 = 1 + eps / 2
    e2 = 1 + eps
    with mpmath.workdps(60):
        lg = mpmath.log(m)
        height = 1 / (m * lg ** (mpmath.mpf(int(e1.numerator)) / int(e1.denominator)))
        outer = m * lg ** (mpmath.mpf(int(e2.numerator)) / int(e2.denominator))
        return _round_to_dyadic(height), _round_to_dyadic(outer)


def _sparse(params) -> StepFn:
    eps = as_rat(params.get("eps", Rat(1, 2)))
    m_max = int(params.get("M_max", 0))
    if not 0 < eps < 1:
        raise ValueError("eps must lie strictly between 0 and 1")
    if m_max < 10:
        raise ValueError("M_max must be at least 10")
    pieces = []
    for m in range(10, m_max + 1):
        height, outer = sparse_markers(m, eps)
        pieces.append((outer, outer + 1, height))
    return StepFn(pieces)


_GENERATORS = {
    "f1": lambda params: StepFn(),
    "f2": lambda params: StepFn([(-1, 1, 1)]),
    "f3": _f3,
    "f4": lambda params: StepFn([(-1, 1, Rat(1, _k(params)))]),
    "f5": _f5,
    "f7": lambda params: StepFn([(-1, 0, 1), (1, 2, 100)]),
    "f8": _f8,
    "f9": _f9,
    "sparse": _sparse,
}


def _k(params) -> int:
    k = int(params.get("k", 0))
    if k < 1:
        raise ValueError("k must be a positive integer")
    return k


def generate(spec, **params) -> StepFn:
    """Generate a corpus function from a CorpusSpec or an id plus params."""
    if isinstance(spec, str):
        spec = CorpusSpec(spec, params)
    elif params:
        raise TypeError("pass parameters inside the CorpusSpec or as keywords, not both")
    try:
        builder = _GENERATORS[spec.id]
    except KeyError:
        raise ValueError(f"unknown corpus id {spec.id!r}; expected one of {CORPUS_IDS}") from None
    return builder(spec.params)


def closed_form_maximal(fid: str, x, k: int | None = None) -> Rat:
    """Known closed form of the maximal value for f2 and f4."""
    ax = abs(as_rat(x))
    if fid == "f2":
        return Rat(1) if ax < 1 else 1 / (ax + 1)
    if fid == "f4":
        if k is None or k < 1:
            raise ValueError("f4 requires the height parameter k")
        return Rat(1, k) if ax < 1 else Rat(1) / (k * ax + k)
    raise ValueError(f"no closed-form maximal value for {fid!r}")


def closed_form_frequency(fid: str, x, k: int | None = None) -> Rat | None:
    """Known closed form of the frequency, where one exists.

    f2 and f4 have one everywhere (and it does not depend on k). For f5 it
    is 1 - x, but only at the bump left endpoints x = 3/2^(n+1) with
    n >= 2; None is returned elsewhere.
    """
    x = as_rat(x)
    if fid in ("f2", "f4"):
        ax = abs(x)
        return Rat(0) if ax <= 1 else ax + 1
    if fid == "f5":
        den = int(x.denominator)
        if x.numerator == 3 and den & (den - 1) == 0 and den >= 8 and 0 < x < 1:
            return 1 - x
        return None
    raise ValueError(f"no closed-form frequency for {fid!r}")
