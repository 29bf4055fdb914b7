"""Reduced words in the rank-2 free group on {a, b}.

A word is a tuple of (letter, exponent) runs with nonzero exponents and no
two adjacent runs on the same letter; the empty tuple is the identity.
Words are immutable and every operation returns a new word.

Two renderings exist: the internal {a, b} alphabet, and an {A, B} view
related by a = A^-1 and b = B.  Parsing and formatting translate between
them; the stored runs always use {a, b}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

GENERATORS = ("a", "b")
ALPHABETS = ("ab", "AB")

_EXPONENT_RE = re.compile(r"[+-]?\d+")


def _check_alphabet(alphabet: str) -> tuple[str, str]:
    if alphabet not in ALPHABETS:
        raise ValueError(f"alphabet must be one of {ALPHABETS}, got {alphabet!r}")
    return ("a", "b") if alphabet == "ab" else ("A", "B")


@dataclass(frozen=True)
class FreeWord:
    runs: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "runs", tuple(tuple(r) for r in self.runs))
        prev = None
        for g, e in self.runs:
            if g not in GENERATORS:
                raise ValueError(f"unknown generator {g!r}")
            if not isinstance(e, int) or e == 0:
                raise ValueError(f"run exponent must be a nonzero integer: {e!r}")
            if g == prev:
                raise ValueError("word is not reduced: adjacent runs share a letter")
            prev = g

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls(())

    @classmethod
    def letter(cls, g: str, exponent: int = 1) -> "FreeWord":
        return cls(((g, exponent),))

    @classmethod
    def from_runs(cls, pairs: Iterable[tuple[str, int]]) -> "FreeWord":
        """Build a word from arbitrary runs, merging and cancelling as needed."""
        out: list[tuple[str, int]] = []
        for g, e in pairs:
            if e == 0:
                continue
            if out and out[-1][0] == g:
                merged = out[-1][1] + e
                out.pop()
                if merged:
                    out.append((g, merged))
            else:
                out.append((g, e))
        return cls(tuple(out))

    @property
    def is_identity(self) -> bool:
        return not self.runs

    @property
    def length(self) -> int:
        return sum(abs(e) for _, e in self.runs)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord.from_runs(self.runs + other.runs)

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return self.inverse() ** (-n)
        return FreeWord.from_runs(self.runs * n)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.runs)))

    def __invert__(self) -> "FreeWord":
        return self.inverse()

    def reverse(self) -> "FreeWord":
        """The word read back to front; exponents keep their signs."""
        return FreeWord(tuple(reversed(self.runs)))

    def is_palindrome(self) -> bool:
        return self.runs == tuple(reversed(self.runs))

    def exponent_sum(self, g: str) -> int:
        return sum(e for gg, e in self.runs if gg == g)

    def factor_count(self, g: str) -> int:
        """Number of occurrences of g or its inverse as letters."""
        return sum(abs(e) for gg, e in self.runs if gg == g)

    @classmethod
    def parse(cls, text: str, alphabet: str = "ab") -> "FreeWord":
        """Read letters with optional ^exponent, juxtaposed or spaced."""
        la, lb = _check_alphabet(alphabet)
        if text.strip() == "1":
            return cls.identity()
        runs: list[tuple[str, int]] = []
        i = 0
        while i < len(text):
            c = text[i]
            if c.isspace():
                i += 1
                continue
            if c == la:
                g = "a"
            elif c == lb:
                g = "b"
            else:
                raise ValueError(
                    f"unexpected character {c!r} at position {i}; expected {la!r} or {lb!r}"
                )
            i += 1
            e = 1
            if i < len(text) and text[i] == "^":
                i += 1
                m = _EXPONENT_RE.match(text, i)
                if m is None:
                    raise ValueError(f"missing exponent after '^' at position {i}")
                e = int(m.group())
                if e == 0:
                    raise ValueError(f"zero exponent at position {i}")
                i = m.end()
            if g == "a" and alphabet == "AB":
                e = -e
            runs.append((g, e))
        return cls.from_runs(runs)

    def format(self, alphabet: str = "ab") -> str:
        """Render as space-separated tokens; '^' appears only when needed."""
        _check_alphabet(alphabet)
        if self.is_identity:
            return "1"
        tokens = []
        for letter, e in self.to_pairs(alphabet):
            tokens.append(letter if e == 1 else f"{letter}^{e}")
        return " ".join(tokens)

    def to_pairs(self, alphabet: str = "ab") -> list[list]:
        """[letter, exponent] pairs in the requested alphabet (JSON view)."""
        _check_alphabet(alphabet)
        out = []
        for g, e in self.runs:
            if alphabet == "AB":
                out.append(["A" if g == "a" else "B", -e if g == "a" else e])
            else:
                out.append([g, e])
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"FreeWord({self.format()!r})"
