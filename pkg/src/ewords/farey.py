"""Exact arithmetic on the extended rationals and their mediant structure.

Values live in Q ∪ {∞} and are kept in lowest terms with a nonnegative
denominator.  ∞ is represented uniquely as 1/0 and compares greater than
every finite value; 0 is 0/1.  On top of the raw values the module knows
the Farey-neighbor relation, mediants, parents (the two lower-level
neighbors a value is the mediant of), continued fractions in canonical
form, and the level of a value in the mediant tree.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from typing import Iterable


@functools.total_ordering
@dataclass(frozen=True)
class ExtRational:
    """p/q in lowest terms.  q == 0 encodes ∞ and is only legal as 1/0."""

    p: int
    q: int = 1

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ValueError(f"denominator must be nonnegative: {self.p}/{self.q}")
        if self.q == 0 and self.p != 1:
            raise ValueError(f"infinity must be written 1/0: {self.p}/0")
        if math.gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"not in lowest terms: {self.p}/{self.q}")

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_negative(self) -> bool:
        return self.p < 0

    @property
    def is_orphan(self) -> bool:
        """True for 0/1 and 1/0, the two values with no parents."""
        return self.q == 0 or (self.p == 0 and self.q == 1)

    def __neg__(self) -> "ExtRational":
        return self if self.is_infinite else ExtRational(-self.p, self.q)

    def __lt__(self, other: "ExtRational") -> bool:
        if not isinstance(other, ExtRational):
            return NotImplemented
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.p * other.q < other.p * self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


ZERO = ExtRational(0, 1)
INFINITY = ExtRational(1, 0)


def normalize(p: int, q: int) -> ExtRational:
    """Reduce p/q to the canonical representative.

    Any p/0 with p != 0 collapses to 1/0; a negative denominator moves its
    sign to the numerator.  0/0 is rejected.
    """
    if p == 0 and q == 0:
        raise ValueError("0/0 is not an extended rational")
    if q < 0:
        p, q = -p, -q
    if q == 0:
        return INFINITY
    g = math.gcd(abs(p), q)
    return ExtRational(p // g, q // g)


_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:\s*/\s*([+-]?\d+))?")


def parse_rational(text: str) -> ExtRational:
    """Read "p/q", a bare integer, or "inf"."""
    t = text.strip()
    if t.lower() == "inf":
        return INFINITY
    m = _RATIONAL_RE.fullmatch(t)
    if m is None:
        raise ValueError(f"cannot parse rational {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return normalize(p, q)


def is_farey_neighbor(x: ExtRational, y: ExtRational) -> bool:
    """True iff |ps - rq| == 1 for x = p/q and y = r/s."""
    return abs(x.p * y.q - y.p * x.q) == 1


def farey_sum(x: ExtRational, y: ExtRational) -> ExtRational:
    """Mediant (p+r)/(q+s) of two Farey neighbors.

    The result is automatically in lowest terms because the neighbor
    determinant divides any common factor.
    """
    if not is_farey_neighbor(x, y):
        raise ValueError(f"{x} and {y} are not Farey neighbors")
    return ExtRational(x.p + y.p, x.q + y.q)


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical continued fraction [a0; a1, ..., ak] of a nonnegative rational.

    a0 >= 0, interior entries >= 1, and the last entry >= 2 whenever there
    is more than one, which makes the expansion unique.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("continued fraction needs at least one entry")
        if self.entries[0] < 0:
            raise ValueError(f"leading entry must be nonnegative: {self.entries[0]}")
        if any(a < 1 for a in self.entries[1:]):
            raise ValueError(f"entries after the first must be positive: {list(self.entries)}")
        if len(self.entries) > 1 and self.entries[-1] < 2:
            raise ValueError("canonical form requires the last entry to be at least 2")

    def __str__(self) -> str:
        return format_entries(self.entries)


def format_entries(entries: Iterable[int]) -> str:
    seq = list(entries)
    return f"[{seq[0]};{','.join(str(a) for a in seq[1:])}]"


def parse_bracketed_entries(text: str) -> list[int]:
    """Read a "[n0;n1,...,nk]" entry list, whitespace tolerant.

    Shared between continued fractions and stepping sequences; validation
    beyond basic shape is left to the caller.
    """
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"entry list must be bracketed: {text!r}")
    inner = t[1:-1]
    head, _, tail = inner.partition(";")
    try:
        entries = [int(head.strip())]
        tail = tail.strip()
        if tail:
            entries.extend(int(tok.strip()) for tok in tail.split(","))
    except ValueError:
        raise ValueError(f"cannot parse entry list {text!r}") from None
    return entries


def parse_continued_fraction(text: str) -> ContinuedFraction:
    """Read "[a0;a1,...,ak]", folding a trailing 1 into canonical form."""
    entries = parse_bracketed_entries(text)
    if len(entries) > 1 and entries[-1] == 1:
        entries = entries[:-2] + [entries[-2] + 1]
    return ContinuedFraction(tuple(entries))


def to_continued_fraction(x: ExtRational) -> ContinuedFraction:
    """Canonical expansion of a finite nonnegative value."""
    if x.is_infinite or x.is_negative:
        raise ValueError(f"continued fractions cover finite nonnegative values only: {x}")
    entries = []
    p, q = x.p, x.q
    while q:
        a, r = divmod(p, q)
        entries.append(a)
        p, q = q, r
    return ContinuedFraction(tuple(entries))


def evaluate_entries(entries: Iterable[int]) -> ExtRational:
    """Value of an entry list via the standard three-term recursion."""
    seq = list(entries)
    if not seq:
        raise ValueError("empty entry list has no value")
    num_prev, den_prev = 0, 1
    num, den = 1, 0
    for a in seq:
        num_prev, den_prev, num, den = num, den, a * num + num_prev, a * den + den_prev
    return ExtRational(num, den)


def from_continued_fraction(cf: ContinuedFraction) -> ExtRational:
    return evaluate_entries(cf.entries)


def parents(x: ExtRational) -> tuple[ExtRational, ExtRational]:
    """The two lower-level Farey neighbors whose mediant rebuilds x.

    Returned ordered (lower, upper).  For positive x both bounds are
    sharp: lower < x < upper with ∞ greatest.  Negative values mirror the
    positive ones, which puts ∞ in the lower slot for negative integers:
    the parents of -3 are (1/0, -2/1).
    """
    if x.is_orphan:
        raise ValueError(f"orphan has no parents: {x}")
    if x.is_negative:
        lo, up = parents(-x)
        return (-up, -lo)
    entries = list(to_continued_fraction(x).entries)
    shorter = entries[:-1]
    first = evaluate_entries(shorter) if shorter else INFINITY
    dec = entries[:-1] + [entries[-1] - 1]
    if len(dec) > 1 and dec[-1] == 1:
        dec = dec[:-2] + [dec[-2] + 1]
    second = evaluate_entries(dec)
    return (first, second) if first < second else (second, first)


def farey_level(x: ExtRational) -> int:
    """Depth of x in the mediant tree; the two orphans sit at level 0.

    Equals the entry sum of the canonical continued fraction, and is
    mirror symmetric: a negative value sits as deep as its absolute value.
    """
    if x.is_orphan:
        return 0
    if x.is_negative:
        return farey_level(-x)
    return sum(to_continued_fraction(x).entries)
