"""Canonical nonnegative rational step functions.

A step function here is a finite list of half-open pieces [left, right)
carrying a positive rational value; the function is zero elsewhere. The
canonical form is sorted, pairwise disjoint, stores no zero-valued pieces,
and merges abutting pieces with equal values, so two functions that agree
almost everywhere have equal canonical forms.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterable, Iterator, NamedTuple

from .rational import Rat, RationalFormatError, as_rat, format_rational, parse_rational

__all__ = ["Piece", "StepFn", "StepFnError", "ParseError", "parse_stepfn", "serialize_stepfn"]


class Piece(NamedTuple):
    left: Rat
    right: Rat
    value: Rat


class StepFnError(ValueError):
    """Invalid step-function data: bad interval, negative value, or overlap."""


class ParseError(StepFnError):
    """A step-function file that violates the format, located by line."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _canonical(pieces: Iterable) -> tuple[Piece, ...]:
    kept = []
    for left, right, value in pieces:
        left, right, value = as_rat(left), as_rat(right), as_rat(value)
        if left >= right:
            raise StepFnError(
                f"empty or inverted interval [{format_rational(left)}, {format_rational(right)})"
            )
        if value < 0:
            raise StepFnError(f"negative value {format_rational(value)}")
        if value != 0:
            kept.append((left, right, value))
    kept.sort()
    merged: list[list[Rat]] = []
    for left, right, value in kept:
        if merged and left < merged[-1][1]:
            raise StepFnError(f"overlapping pieces at {format_rational(left)}")
        if merged and left == merged[-1][1] and value == merged[-1][2]:
            merged[-1][1] = right
        else:
            merged.append([left, right, value])
    return tuple(Piece(*p) for p in merged)


class StepFn:
    """An integrable step function in canonical form.

    Instances are immutable values: every operation returns a new StepFn.
    Construction canonicalizes and validates the supplied pieces and
    precomputes the prefix integrals that make integrate() a pair of
    binary searches.
    """

    __slots__ = ("pieces", "_events", "_values", "_cum")

    def __init__(self, pieces: Iterable = ()):
        self.pieces = _canonical(pieces)
        events: list[Rat] = []
        values: list[Rat] = []
        cum: list[Rat] = [Rat(0)]
        zero = Rat(0)
        prev_right = None
        for left, right, value in self.pieces:
            if prev_right is None:
                events.append(left)
            elif left > prev_right:
                values.append(zero)
                events.append(left)
                cum.append(cum[-1])
            values.append(value)
            events.append(right)
            cum.append(cum[-1] + value * (right - left))
            prev_right = right
        self._events = events
        self._values = values
        self._cum = cum

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.pieces

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def mass(self) -> Rat:
        """Total integral (the L1 norm, since values are nonnegative)."""
        return self._cum[-1]

    def breakpoints(self) -> tuple[Rat, ...]:
        """All piece endpoints, sorted and deduplicated."""
        return tuple(self._events)

    def support_radius(self) -> Rat:
        """Smallest R with the support inside [-R, R]."""
        if not self._events:
            return Rat(0)
        return max(abs(self._events[0]), abs(self._events[-1]))

    def integral_to(self, t) -> Rat:
        """Integral over (-inf, t]."""
        t = as_rat(t)
        e = self._events
        if not e or t <= e[0]:
            return Rat(0)
        if t >= e[-1]:
            return self._cum[-1]
        i = bisect_right(e, t) - 1
        return self._cum[i] + self._values[i] * (t - e[i])

    def integrate(self, a, b) -> Rat:
        """Exact integral over [a, b]; requires a <= b."""
        a, b = as_rat(a), as_rat(b)
        if a > b:
            raise ValueError("integrate: lower bound exceeds upper bound")
        return self.integral_to(b) - self.integral_to(a)

    def value_at(self, x) -> Rat:
        """Pointwise value under the half-open convention (right-continuous)."""
        x = as_rat(x)
        e = self._events
        i = bisect_right(e, x) - 1
        if i < 0 or i >= len(self._values):
            return Rat(0)
        return self._values[i]

    def sup_on(self, lo, hi) -> Rat:
        """Essential sup of f on the open interval (lo, hi); requires lo < hi."""
        lo, hi = as_rat(lo), as_rat(hi)
        if lo >= hi:
            raise ValueError("sup_on: empty interval")
        e = self._events
        top = Rat(0)
        if not e or hi <= e[0] or lo >= e[-1]:
            return top
        i = max(bisect_right(e, lo) - 1, 0)
        while i < len(self._values) and e[i] < hi:
            if e[i + 1] > lo and self._values[i] > top:
                top = self._values[i]
            i += 1
        return top

    def one_sided(self, x) -> tuple[Rat, Rat]:
        """Essential values just left and just right of x.

        Well defined because there are finitely many breakpoints: the value
        on (x - d, x) and on (x, x + d) is constant for small d.
        """
        x = as_rat(x)
        e = self._events
        zero = Rat(0)
        i = bisect_right(e, x) - 1
        right = self._values[i] if 0 <= i < len(self._values) else zero
        if 0 <= i < len(e) and e[i] == x:
            i -= 1
        left = self._values[i] if 0 <= i < len(self._values) else zero
        return left, right

    # -- transforms ----------------------------------------------------

    def scale(self, c) -> "StepFn":
        """Multiply values by c > 0."""
        c = as_rat(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return StepFn((l, r, v * c) for l, r, v in self.pieces)

    def translate(self, t) -> "StepFn":
        t = as_rat(t)
        return StepFn((l + t, r + t, v) for l, r, v in self.pieces)

    def reflect(self) -> "StepFn":
        return StepFn((-r, -l, v) for l, r, v in self.pieces)

    # -- value semantics -----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, StepFn):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __repr__(self) -> str:
        body = "; ".join(
            f"[{format_rational(l)},{format_rational(r)})={format_rational(v)}"
            for l, r, v in self.pieces
        )
        return f"StepFn({body or '0'})"

    def __iter__(self) -> Iterator[Piece]:
        return iter(self.pieces)

    def serialize(self) -> str:
        """Canonical text form: one `left right value` line per piece."""
        lines = [
            f"{format_rational(l)} {format_rational(r)} {format_rational(v)}"
            for l, r, v in self.pieces
        ]
        return "".join(line + "\n" for line in lines)


def parse_stepfn(text) -> StepFn:
    """Parse the step-function file format.

    UTF-8 text, one `left right value` triple per line, `#` comments,
    blank lines ignored. Fields are integers or p/q. Pieces need not be
    sorted but must not overlap. Errors carry the offending line number.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(lineno, f"expected 3 fields, found {len(fields)}")
        try:
            left, right, value = (parse_rational(field) for field in fields)
        except RationalFormatError as exc:
            raise ParseError(lineno, str(exc)) from None
        if left >= right:
            raise ParseError(lineno, "left endpoint must be less than right endpoint")
        if value < 0:
            raise ParseError(lineno, "negative value")
        rows.append((left, right, value, lineno))

    by_position = sorted(rows, key=lambda row: (row[0], row[1]))
    prev_right = prev_line = None
    for left, right, _, lineno in by_position:
        if prev_right is not None and left < prev_right:
            raise ParseError(
                lineno,
                f"overlaps the piece ending at {format_rational(prev_right)} (line {prev_line})",
            )
        prev_right, prev_line = right, lineno
    return StepFn((l, r, v) for l, r, v, _ in rows)


def serialize_stepfn(f: StepFn) -> str:
    return f.serialize()
