"""The rational-indexed enumeration of primitive words.

e_word sends 0/1 to a, 1/0 to b, and every other extended rational to an
ordered product of the words of its two parents.  The order is decided by
the parity of numerator * denominator: odd puts the upper parent's word
first, even the lower's.  The index of a product is always the mediant of
the factors' indices, so the word at p/q has |p| b-letters and q
a-letters, and it is a palindrome exactly when p * q is even.

Two termination modes produce identical words.  Orphan mode recurses all
the way down to 0/1 and 1/0; shortcut mode stops early at integers n/1
and reciprocals 1/n, whose words have closed forms.

Negative indices mirror positive ones with the sign of every a-exponent
flipped.  Concretely the recursion runs through the negative-side parents
with the product order swapped, and on that side the zero endpoint
contributes a^-1 instead of a.
"""

from __future__ import annotations

from .farey import ZERO, ExtRational, farey_sum, parents
from .word import FreeWord

MODES = ("orphan", "shortcut")

_A = FreeWord.letter("a")
_B = FreeWord.letter("b")
_A_INV = FreeWord.letter("a", -1)


def sign_rule(x: int) -> int:
    """Exponent-sign chooser for the closed forms: 1 on negatives, -1 otherwise."""
    return 1 if x < 0 else -1


def e_word_integer(n: int) -> FreeWord:
    """Closed form at n/1: b^ceil(|n|/2) a^(-+1) b^floor(|n|/2)."""
    k = abs(n)
    return FreeWord.from_runs(
        [("b", (k + 1) // 2), ("a", -sign_rule(n)), ("b", k // 2)]
    )


def e_word_reciprocal(n: int) -> FreeWord:
    """Closed form at 1/n for n != 0: a-power, b, a-power."""
    if n == 0:
        raise ValueError("reciprocal index must be nonzero; 1/0 is the word b")
    k = abs(n)
    s = -sign_rule(n)
    return FreeWord.from_runs([("a", s * (k // 2)), ("b", 1), ("a", s * ((k + 1) // 2))])


def e_word(x: ExtRational, mode: str = "orphan") -> FreeWord:
    """The word at index x, computed by the parent-product recursion.

    Results are memoized per call only, so concurrent evaluations never
    share state.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    memo: dict[ExtRational, FreeWord] = {}

    def terminal(y: ExtRational) -> FreeWord | None:
        if y.is_infinite:
            return _B
        if mode == "shortcut":
            if y.q == 1:
                return e_word_integer(y.p)
            if abs(y.p) == 1:
                return e_word_reciprocal(y.p * y.q)
        elif y == ZERO:
            return _A
        return None

    def negative_parent_value(z: ExtRational) -> FreeWord:
        # the zero endpoint flips on the negative side
        if z == ZERO:
            return _A_INV
        if z.is_infinite:
            return _B
        return rec(z)

    def rec(y: ExtRational) -> FreeWord:
        w = memo.get(y)
        if w is not None:
            return w
        w = terminal(y)
        if w is None:
            lo, up = parents(y)
            odd = (y.p * y.q) % 2 == 1
            if y.is_negative:
                wlo, wup = negative_parent_value(lo), negative_parent_value(up)
                w = wlo * wup if odd else wup * wlo
            else:
                wlo, wup = rec(lo), rec(up)
                w = wup * wlo if odd else wlo * wup
        memo[y] = w
        return w

    return rec(x)


def child_word(
    x: ExtRational, wx: FreeWord, y: ExtRational, wy: FreeWord
) -> tuple[ExtRational, FreeWord]:
    """Word at the mediant of two nonnegative Farey neighbors x < y.

    Takes the neighbors' words on trust and only arranges the product:
    upper first when the mediant has odd numerator * denominator, lower
    first otherwise.
    """
    if x.is_negative or y.is_negative:
        raise ValueError(f"indices must be nonnegative: {x}, {y}")
    if not x < y:
        raise ValueError(f"expected {x} < {y}")
    child = farey_sum(x, y)
    odd = (child.p * child.q) % 2 == 1
    return child, (wy * wx if odd else wx * wy)


# Parity profile ('e'/'o' for p, q, r, s) of an ordered neighbor pair
# p/q < r/s determines the parity of the mediant's numerator * denominator.
# Exactly these six profiles can occur.
PARITY_ROWS = {
    ("e", "o", "o", "e"): "odd",
    ("o", "o", "e", "o"): "even",
    ("o", "o", "o", "e"): "even",
    ("o", "e", "e", "o"): "odd",
    ("e", "o", "o", "o"): "even",
    ("o", "e", "o", "o"): "even",
}

# Impossible profiles (None = either parity): a numerator-denominator pair
# in lowest terms is never even/even, and the neighbor determinant rules
# out the three alternating/all-odd shapes.
EXCLUDED_ROWS = (
    ("e", "e", None, None),
    (None, None, "e", "e"),
    ("e", "o", "e", "o"),
    ("o", "e", "o", "e"),
    ("o", "o", "o", "o"),
)


def parity_pattern(x: ExtRational, y: ExtRational) -> tuple[str, str, str, str]:
    """('e'/'o' for p, q, r, s) of an ordered pair x = p/q, y = r/s."""
    return tuple("o" if v % 2 else "e" for v in (x.p, x.q, y.p, y.q))


def matches_excluded_row(pattern: tuple[str, str, str, str]) -> bool:
    return any(
        all(want is None or want == got for want, got in zip(row, pattern))
        for row in EXCLUDED_ROWS
    )
