"""Exact rational scalars and their text form.

Every quantity in this package (endpoints, values, radii, averages) is an
exact rational; nothing is ever rounded. The scalar type is gmpy2's mpq
when available and fractions.Fraction otherwise: both are arbitrary
precision, kept in lowest terms with a positive denominator, and hashable.
"""

from __future__ import annotations

import re

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat

__all__ = [
    "Rat",
    "RationalFormatError",
    "as_rat",
    "format_rational",
    "inv_pow2",
    "parse_rational",
    "sample_rationals",
]


class RationalFormatError(ValueError):
    """Text that is not an optionally signed integer or p/q fraction."""


_PATTERN = re.compile(r"\A[+-]?\d+(?:/\d+)?\Z")


def as_rat(value) -> Rat:
    """Coerce an int, Fraction, Rat, or rational string to the scalar type.

    Floats are rejected: accepting them would smuggle binary rounding into
    an otherwise exact pipeline.
    """
    if isinstance(value, float):
        raise TypeError("floating point values are not exact; pass int, Rat, or 'p/q' text")
    if isinstance(value, str):
        return parse_rational(value)
    return Rat(value)


def parse_rational(text: str) -> Rat:
    """Parse `p`, `-p`, or `p/q` text into an exact rational.

    Decimal and exponent syntax is deliberately not accepted, so no input
    can pass through floating point on its way in.
    """
    s = text.strip()
    if not _PATTERN.match(s):
        raise RationalFormatError(f"not an integer or p/q rational: {text!r}")
    num, _, den = s.partition("/")
    if den:
        if int(den) == 0:
            raise RationalFormatError(f"zero denominator: {text!r}")
        return Rat(int(num), int(den))
    return Rat(int(num))


def format_rational(q) -> str:
    """Render in lowest terms as `p/q`, or bare `p` for integers."""
    q = Rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def inv_pow2(k: int) -> Rat:
    """2**-k as an exact rational, for k >= 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Rat(1, 2**k)


def sample_rationals(rng, count: int, bound, max_denominator: int = 64) -> list:
    """Draw `count` rationals from a seeded random.Random instance.

    Samples p/q with 1 <= q <= max_denominator and |p/q| roughly within
    `bound`. The generator is the documented source of randomness for every
    sampled check suite, so runs with equal seeds are reproducible.
    """
    bound = as_rat(bound)
    out = []
    for _ in range(count):
        den = rng.randrange(1, max_denominator + 1)
        cap = int(bound * den) + 1
        out.append(Rat(rng.randrange(-cap, cap + 1), den))
    return out
