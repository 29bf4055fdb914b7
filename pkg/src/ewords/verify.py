"""Independent oracles and exhaustive small-range property sweeps.

Everything here recomputes results the long way round: parents by
brute-force splitting search, words by the literal unmemoized recursion,
counts by enumerating and measuring.  Production code is checked against
these paths, never against itself.  sweep() bundles every cross-module
property into one report over a bounded index range; a shell of radius n
means all indices p/q with |p| + q <= n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

from .enumeration import (
    PARITY_ROWS,
    child_word,
    e_word,
    e_word_integer,
    e_word_reciprocal,
    matches_excluded_row,
    parity_pattern,
)
from .farey import (
    INFINITY,
    ZERO,
    ExtRational,
    evaluate_entries,
    farey_level,
    farey_sum,
    from_continued_fraction,
    is_farey_neighbor,
    normalize,
    parents,
    parse_continued_fraction,
    to_continued_fraction,
)
from .stepper import (
    SIDES,
    ESequence,
    closed_form_stop,
    exponent_form_check,
    initial_pair,
    run_esequence,
    run_preserving,
    step,
)
from .word import FreeWord


def rational_indices(bound: int) -> list[ExtRational]:
    """All indices with |p| + q <= bound, in increasing order (∞ last)."""
    if bound < 1:
        raise ValueError(f"bound must be positive: {bound}")
    out = [INFINITY]
    for q in range(1, bound + 1):
        for p in range(-(bound - q), bound - q + 1):
            if gcd(abs(p), q) == 1:
                out.append(ExtRational(p, q))
    return sorted(out)


def neighbor_pairs(
    bound: int, include_negative: bool = True
) -> list[tuple[ExtRational, ExtRational]]:
    """Ordered Farey-neighbor pairs (x < y) with both indices in the shell."""
    idx = rational_indices(bound)
    if not include_negative:
        idx = [z for z in idx if not z.is_negative]
    return [
        (x, y)
        for i, x in enumerate(idx)
        for y in idx[i + 1 :]
        if is_farey_neighbor(x, y)
    ]


def oracle_parents(x: ExtRational) -> tuple[ExtRational, ExtRational]:
    """Parents by exhaustive splitting search, not continued fractions.

    Tries every decomposition p = u + r, q = v + s into two valid indices
    that are Farey neighbors of each other; exactly one pair exists.
    Negative indices mirror positive ones (the canonical ∞ has no
    negative twin, so the mirrored pair keeps ∞ in the first slot).
    """
    if x.is_orphan:
        raise ValueError(f"orphan has no parents: {x}")
    if x.is_negative:
        lo, up = oracle_parents(-x)
        return (-up, -lo)
    found = set()
    for u in range(x.p + 1):
        for v in range(x.q + 1):
            r, s = x.p - u, x.q - v
            if (u, v) == (0, 0) or (r, s) == (0, 0):
                continue
            if (v == 0 and u != 1) or (s == 0 and r != 1):
                continue
            if gcd(u, v) != 1 or gcd(r, s) != 1:
                continue
            if abs(u * s - r * v) != 1:
                continue
            found.add(tuple(sorted((ExtRational(u, v), ExtRational(r, s)))))
    if len(found) != 1:
        raise ValueError(f"splitting search found {len(found)} parent pairs for {x}")
    return found.pop()


def oracle_e_word(x: ExtRational) -> FreeWord:
    """The literal parent-product recursion: no memo, no closed forms.

    Negative indices go through the letter mirror a -> a^-1 applied to
    the positive word — a different route than the production code's
    swapped-order recursion on negative parents.
    """
    if x == ZERO:
        return FreeWord.letter("a")
    if x == INFINITY:
        return FreeWord.letter("b")
    if x.is_negative:
        mirrored = oracle_e_word(-x)
        return FreeWord.from_runs((g, -e if g == "a" else e) for g, e in mirrored.runs)
    lo, up = oracle_parents(x)
    wlo, wup = oracle_e_word(lo), oracle_e_word(up)
    return wup * wlo if (x.p * x.q) % 2 else wlo * wup


def enumerate_ewords(bound: int, mode: str = "orphan") -> dict[ExtRational, FreeWord]:
    """Word for every index in the shell, keyed by index."""
    return {x: e_word(x, mode=mode) for x in rational_indices(bound)}


def count_ewords_of_length(n: int) -> tuple[int, int]:
    """(arithmetic count, measured count) of words whose total length is n.

    The arithmetic side counts nonzero |p| < n coprime to n, one sign
    each way; the measured side enumerates the shell of radius n and
    takes lengths.  The two agree for every n >= 2; n = 1 is excluded
    because the orphans fall outside the coprime-pair pattern.
    """
    if n < 2:
        raise ValueError(f"length counts start at n = 2, got {n}")
    arithmetic = 2 * sum(1 for p in range(1, n) if gcd(p, n) == 1)
    measured = sum(1 for w in enumerate_ewords(n).values() if w.length == n)
    return arithmetic, measured


def recursion_call_count(x: ExtRational, mode: str = "orphan") -> int:
    """Distinct indices the memoized recursion evaluates, terminals included."""
    if mode not in ("orphan", "shortcut"):
        raise ValueError(f"unknown mode {mode!r}")
    seen: set[ExtRational] = set()

    def visit(y: ExtRational) -> None:
        if y in seen:
            return
        seen.add(y)
        if y.is_infinite or y == ZERO:
            return
        if mode == "shortcut" and (y.q == 1 or abs(y.p) == 1):
            return
        for z in parents(y):
            visit(z)

    visit(x)
    return len(seen)


@dataclass(frozen=True)
class SweepFailure:
    input: str
    expected: str
    got: str

    def to_dict(self) -> dict:
        return {"input": self.input, "expected": self.expected, "got": self.got}


@dataclass(frozen=True)
class SweepCheck:
    name: str
    tested: int
    failures: tuple[SweepFailure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "tested": self.tested,
            "failures": [f.to_dict() for f in self.failures],
        }


@dataclass(frozen=True)
class SweepReport:
    bound: int
    checks: tuple[SweepCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failure_count(self) -> int:
        return sum(len(c.failures) for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }

    def format_table(self) -> list[str]:
        width = max(len(c.name) for c in self.checks)
        lines = [f"sweep over |p| + q <= {self.bound}"]
        for c in self.checks:
            status = "ok" if c.ok else f"{len(c.failures)} FAILED"
            lines.append(f"  {c.name.ljust(width)}  {c.tested:>6}  {status}")
            for f in c.failures[:5]:
                lines.append(f">     {f.input}: expected {f.expected}, got {f.got}")
            if len(c.failures) > 5:
                lines.append(f">     ... {len(c.failures) - 5} more")
        total = sum(c.tested for c in self.checks)
        verdict = "PASS" if self.ok else "FAIL"
        lines.append(f"{verdict}: {total} instances, {self.failure_count} failures")
        return lines


# Each case generator yields (ok, input, expected, got); only failing
# cases get stringified into the report.
Case = tuple[bool, object, object, object]


def _run_check(name: str, cases: Iterable[Case]) -> SweepCheck:
    tested = 0
    failures = []
    for ok, inp, expected, got in cases:
        tested += 1
        if not ok:
            failures.append(SweepFailure(str(inp), str(expected), str(got)))
    return SweepCheck(name, tested, tuple(failures))


def _parents_oracle_cases(positives: list[ExtRational]) -> Iterator[Case]:
    for x in positives:
        want = oracle_parents(x)
        got = parents(x)
        yield got == want, x, want, got


def _parents_rebuild_cases(positives: list[ExtRational]) -> Iterator[Case]:
    for x in positives:
        lo, up = parents(x)
        ok = (
            lo < x < up
            and is_farey_neighbor(lo, up)
            and farey_sum(lo, up) == x
        )
        yield ok, x, f"neighbors bracketing {x}", (lo, up)


def _level_recursion_cases(positives: list[ExtRational]) -> Iterator[Case]:
    for x in positives:
        lo, up = parents(x)
        want = 1 + max(farey_level(lo), farey_level(up))
        got = farey_level(x)
        yield got == want, x, want, got


def _cf_roundtrip_cases(finite_nonneg: list[ExtRational]) -> Iterator[Case]:
    for x in finite_nonneg:
        cf = to_continued_fraction(x)
        back = from_continued_fraction(cf)
        reparsed = parse_continued_fraction(str(cf))
        yield back == x and reparsed == cf, x, x, (back, reparsed)


def _word_oracle_cases(words: dict[ExtRational, FreeWord]) -> Iterator[Case]:
    for x, w in words.items():
        want = oracle_e_word(x)
        yield w == want, x, want, w


def _mode_equivalence_cases(words: dict[ExtRational, FreeWord]) -> Iterator[Case]:
    for x, w in words.items():
        other = e_word(x, mode="shortcut")
        yield w == other, x, w, other


def _shortcut_form_cases(
    bound: int, words: dict[ExtRational, FreeWord]
) -> Iterator[Case]:
    for n in range(-(bound - 1), bound):
        want = words[ExtRational(n, 1)]
        got = e_word_integer(n)
        yield got == want, f"{n}/1", want, got
    for n in range(-(bound - 1), bound):
        if n == 0:
            continue
        x = normalize(1, n)
        want = words[x]
        got = e_word_reciprocal(n)
        yield got == want, x, want, got


def _call_reduction_cases(indices: list[ExtRational]) -> Iterator[Case]:
    # shortcut termination must strictly help off its own terminal set
    for x in indices:
        if x.q < 2 or abs(x.p) < 2:
            continue
        orphan = recursion_call_count(x, "orphan")
        short = recursion_call_count(x, "shortcut")
        yield short < orphan, x, f"< {orphan} calls", short


def _palindrome_parity_cases(words: dict[ExtRational, FreeWord]) -> Iterator[Case]:
    for x, w in words.items():
        want = (x.p * x.q) % 2 == 0
        got = w.is_palindrome()
        yield got == want, x, f"palindrome={want}", f"palindrome={got}"


def _length_cases(words: dict[ExtRational, FreeWord]) -> Iterator[Case]:
    for x, w in words.items():
        ok = (
            w.factor_count("b") == abs(x.p)
            and w.factor_count("a") == x.q
            and w.length == abs(x.p) + x.q
        )
        yield ok, x, (abs(x.p), x.q), (w.factor_count("b"), w.factor_count("a"))


def _exponent_sum_cases(words: dict[ExtRational, FreeWord]) -> Iterator[Case]:
    for x, w in words.items():
        want = (abs(x.p), -x.q if x.is_negative else x.q)
        got = (w.exponent_sum("b"), w.exponent_sum("a"))
        yield got == want, x, want, got


def _neighbor_palindrome_cases(
    pairs: list[tuple[ExtRational, ExtRational]],
    words: dict[ExtRational, FreeWord],
) -> Iterator[Case]:
    for x, y in pairs:
        ok = words[x].is_palindrome() or words[y].is_palindrome()
        yield ok, (x, y), "at least one palindrome", "neither"


def _parity_table_cases(
    pairs: list[tuple[ExtRational, ExtRational]]
) -> Iterator[Case]:
    for x, y in pairs:
        pattern = parity_pattern(x, y)
        actual = "odd" if ((x.p + y.p) * (x.q + y.q)) % 2 else "even"
        ok = not matches_excluded_row(pattern) and PARITY_ROWS.get(pattern) == actual
        yield ok, (x, y), f"row {pattern} -> {PARITY_ROWS.get(pattern)}", actual


def _mediant_between_cases(
    pairs: list[tuple[ExtRational, ExtRational]]
) -> Iterator[Case]:
    for x, y in pairs:
        m = farey_sum(x, y)
        ok = x < m < y and is_farey_neighbor(x, m) and is_farey_neighbor(m, y)
        yield ok, (x, y), f"{x} < {m} < {y}, both neighbors", m


def _child_product_cases(
    nonneg_pairs: list[tuple[ExtRational, ExtRational]],
    words: dict[ExtRational, FreeWord],
) -> Iterator[Case]:
    for x, y in nonneg_pairs:
        m, w = child_word(x, words[x], y, words[y])
        want = e_word(m)
        yield m == farey_sum(x, y) and w == want, (x, y), want, w


def _trace_word(
    words: dict[ExtRational, FreeWord], idx: ExtRational
) -> FreeWord:
    w = words.get(idx)
    return w if w is not None else e_word(idx)


def _stepper_enumeration_cases(
    finite_positive: list[ExtRational], words: dict[ExtRational, FreeWord]
) -> Iterator[Case]:
    for x in finite_positive:
        seq = ESequence(to_continued_fraction(x).entries)
        trace = run_esequence(seq)
        ok = trace.last_changed_word == words[x] and trace.last_changed_index == x
        yield ok, seq, (x, words[x]), (trace.last_changed_index, trace.last_changed_word)


def _stepper_ewordness_cases(
    finite_positive: list[ExtRational], words: dict[ExtRational, FreeWord]
) -> Iterator[Case]:
    for x in finite_positive:
        trace = run_esequence(ESequence(to_continued_fraction(x).entries))
        prev = trace.initial
        ok = True
        for rec in trace.steps:
            pair = rec.pair
            kept = (
                (pair.left, pair.left_index) == (prev.left, prev.left_index)
                if rec.preserved == "left"
                else (pair.right, pair.right_index) == (prev.right, prev.right_index)
            )
            ok = (
                kept
                and pair.left == _trace_word(words, pair.left_index)
                and pair.right == _trace_word(words, pair.right_index)
            )
            if not ok:
                break
            prev = pair
        yield ok, x, "all step pairs are indexed words", "mismatch"


def _approximant_cases(finite_positive: list[ExtRational]) -> Iterator[Case]:
    for x in finite_positive:
        entries = to_continued_fraction(x).entries
        trace = run_esequence(ESequence(entries))
        ok = True
        for i, pair in enumerate(trace.block_ends()):
            changed = pair.left_index if i % 2 == 0 else pair.right_index
            if changed != evaluate_entries(entries[: i + 1]):
                ok = False
                break
        yield ok, x, "block ends hit the convergents", "mismatch"


def _stopping_form_cases(
    finite_positive: list[ExtRational], words: dict[ExtRational, FreeWord]
) -> Iterator[Case]:
    for x in finite_positive:
        seq = ESequence(to_continued_fraction(x).entries)
        got = exponent_form_check(words[x], seq)
        yield got, (x, seq), True, got


def table_sequences(max_entry: int) -> list[ESequence]:
    """Every sequence shape the stopping tables cover, entries <= max_entry."""
    seqs = []
    r = range(1, max_entry + 1)
    for n0 in r:
        seqs.extend(ESequence((n0, n1)) for n1 in r)
        seqs.extend(ESequence((n0, 1, n2)) for n2 in r)
    for n1 in r:
        seqs.extend(ESequence((0, n1, n2)) for n2 in r)
        seqs.extend(ESequence((0, n1, 1, n3)) for n3 in r)
    return seqs


def canonical_sequences(max_entry: int, max_k: int) -> list[ESequence]:
    """All canonical sequences with entries <= max_entry and at most
    max_k entries after the first."""
    out: list[ESequence] = []

    def extend(prefix: list[int]) -> None:
        if prefix != [0] and (len(prefix) == 1 or prefix[-1] >= 2):
            out.append(ESequence(tuple(prefix)))
        if len(prefix) - 1 < max_k:
            for n in range(1, max_entry + 1):
                extend(prefix + [n])

    for n0 in range(max_entry + 1):
        extend([n0])
    return out


def _closed_form_cases(max_entry: int) -> Iterator[Case]:
    for seq in table_sequences(max_entry):
        want = run_esequence(seq).final
        got = closed_form_stop(seq)
        yield got == want, seq, want, got


def _run_preserving_cases(max_steps: int) -> Iterator[Case]:
    states = [initial_pair()]
    for first in SIDES:
        one = step(initial_pair(), first)
        states.append(one)
        states.extend(step(one, second) for second in SIDES)
    for state in states:
        for side in SIDES:
            for n in range(1, max_steps + 1):
                want = state
                for _ in range(n):
                    want = step(want, side)
                got = run_preserving(state, side, n)
                yield got == want, (state, side, n), want, got


def _counting_cases(max_length: int) -> Iterator[Case]:
    for n in range(2, max_length + 1):
        arithmetic, measured = count_ewords_of_length(n)
        yield arithmetic == measured, f"length {n}", arithmetic, measured


def sweep(bound: int) -> SweepReport:
    """Run every cross-module property exhaustively over one shell.

    The word-vs-oracle comparison uses the deliberately naive recursion,
    so expect runtimes to climb steeply past bound 25 or so.
    """
    if bound < 2:
        raise ValueError(f"sweep bound must be at least 2, got {bound}")
    indices = rational_indices(bound)
    words = {x: e_word(x) for x in indices}
    positives = [x for x in indices if not (x.is_negative or x.is_orphan)]
    finite_nonneg = [x for x in indices if not (x.is_negative or x.is_infinite)]
    finite_positive = [x for x in positives if not x.is_infinite]
    pairs = neighbor_pairs(bound)
    nonneg_pairs = [(x, y) for x, y in pairs if not x.is_negative]
    small = min(bound, 5)

    checks = (
        _run_check("parents-vs-splitting-oracle", _parents_oracle_cases(positives)),
        _run_check("parents-rebuild", _parents_rebuild_cases(positives)),
        _run_check("level-parent-recursion", _level_recursion_cases(positives)),
        _run_check("cf-roundtrip", _cf_roundtrip_cases(finite_nonneg)),
        _run_check("word-vs-oracle", _word_oracle_cases(words)),
        _run_check("mode-equivalence", _mode_equivalence_cases(words)),
        _run_check("shortcut-closed-forms", _shortcut_form_cases(bound, words)),
        _run_check("shortcut-call-reduction", _call_reduction_cases(indices)),
        _run_check("palindrome-parity", _palindrome_parity_cases(words)),
        _run_check("length-law", _length_cases(words)),
        _run_check("exponent-sums", _exponent_sum_cases(words)),
        _run_check("neighbor-palindrome", _neighbor_palindrome_cases(pairs, words)),
        _run_check("parity-table", _parity_table_cases(pairs)),
        _run_check("mediant-betweenness", _mediant_between_cases(pairs)),
        _run_check("child-product-rule", _child_product_cases(nonneg_pairs, words)),
        _run_check(
            "stepper-vs-enumeration",
            _stepper_enumeration_cases(finite_positive, words),
        ),
        _run_check(
            "stepper-ewordness", _stepper_ewordness_cases(finite_positive, words)
        ),
        _run_check("stepper-approximants", _approximant_cases(finite_positive)),
        _run_check(
            "stopping-exponent-form", _stopping_form_cases(finite_positive, words)
        ),
        _run_check("closed-form-tables", _closed_form_cases(small)),
        _run_check("run-preserving-vs-steps", _run_preserving_cases(min(bound, 6))),
        _run_check("length-counting", _counting_cases(min(bound, 12))),
    )
    return SweepReport(bound, checks)
