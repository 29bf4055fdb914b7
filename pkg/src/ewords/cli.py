"""Command-line front end.

Subcommands: compute (word at an index), trace (run a stepping sequence),
parents / cf / level (index arithmetic), verify (property sweep), count
(length counting).  Exit codes: 0 success, 1 a verification-style command
found a mismatch, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .enumeration import MODES, e_word
from .farey import farey_level, parents, parse_rational, to_continued_fraction
from .stepper import ESequence, run_esequence
from .verify import count_ewords_of_length, sweep
from .word import ALPHABETS


def _print_json(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _cmd_compute(args: argparse.Namespace) -> int:
    x = parse_rational(args.rational)
    w = e_word(x, mode=args.mode)
    rendered = w.format(args.alphabet)
    if any(e < 0 for _, e in w.to_pairs(args.alphabet)):
        print("note: word has negative exponents", file=sys.stderr)
    if args.format == "json":
        _print_json(
            {
                "index": str(x),
                "mode": args.mode,
                "alphabet": args.alphabet,
                "word": rendered,
                "runs": w.to_pairs(args.alphabet),
                "length": w.length,
                "palindrome": w.is_palindrome(),
            }
        )
    else:
        print(rendered)
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    seq = ESequence.parse(args.esequence)
    trace = run_esequence(seq)
    if args.format == "json":
        _print_json(trace.to_dict(args.alphabet))
        return 0
    for line in trace.format_lines(args.alphabet):
        print(line)
    final = trace.final
    word = trace.last_changed_word
    print(f"value: {seq.value()}")
    print(f"final indices: {final.left_index}, {final.right_index}")
    print(
        f"last changed: {trace.last_changed_side} = {word.format(args.alphabet)}"
        f"  [index {trace.last_changed_index}]"
    )
    print(f"exponent sums: a={word.exponent_sum('a')} b={word.exponent_sum('b')}")
    return 0


def _cmd_parents(args: argparse.Namespace) -> int:
    x = parse_rational(args.rational)
    lo, up = parents(x)
    if args.format == "json":
        _print_json({"index": str(x), "parents": [str(lo), str(up)]})
    else:
        print(f"{lo} {up}")
    return 0


def _cmd_cf(args: argparse.Namespace) -> int:
    x = parse_rational(args.rational)
    cf = to_continued_fraction(x)
    if args.format == "json":
        _print_json({"index": str(x), "entries": list(cf.entries), "text": str(cf)})
    else:
        print(cf)
    return 0


def _cmd_level(args: argparse.Namespace) -> int:
    x = parse_rational(args.rational)
    level = farey_level(x)
    if args.format == "json":
        _print_json({"index": str(x), "level": level})
    else:
        print(level)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = sweep(args.bound)
    if args.format == "json":
        _print_json(report.to_dict())
    else:
        for line in report.format_table():
            print(line)
    return 0 if report.ok else 1


def _cmd_count(args: argparse.Namespace) -> int:
    arithmetic, measured = count_ewords_of_length(args.length)
    if args.format == "json":
        _print_json(
            {
                "length": args.length,
                "arithmetic": arithmetic,
                "measured": measured,
                "equal": arithmetic == measured,
            }
        )
    else:
        print(f"arithmetic={arithmetic} measured={measured}")
    return 0 if arithmetic == measured else 1


# argparse takes "-2/3" for an option flag; widening its negative-number
# test lets signed fractions through as positional values.
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eword",
        description=(
            "Palindromic primitive words in the rank-2 free group, "
            "indexed by extended rationals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("plain", "json"), default="plain")

    def add_rational(p: argparse.ArgumentParser, help: str) -> None:
        p.add_argument("rational", help=help)
        p._negative_number_matcher = _NEGATIVE_RATIONAL

    p = sub.add_parser("compute", help="word at a rational index")
    add_rational(p, 'index like "68/13", "-2/3", or "inf"')
    p.add_argument("--mode", choices=MODES, default="orphan")
    p.add_argument("--alphabet", choices=ALPHABETS, default="ab")
    add_format(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("trace", help="run a stepping sequence from (a, b)")
    p.add_argument("esequence", help='sequence like "[5;4,3]"')
    p.add_argument("--alphabet", choices=ALPHABETS, default="ab")
    add_format(p)
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("parents", help="lower-level neighbors rebuilding an index")
    add_rational(p, "index whose parents to find")
    add_format(p)
    p.set_defaults(func=_cmd_parents)

    p = sub.add_parser("cf", help="canonical continued fraction of an index")
    add_rational(p, "nonnegative index to expand")
    add_format(p)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("level", help="mediant-tree level of an index")
    add_rational(p, "index whose level to report")
    add_format(p)
    p.set_defaults(func=_cmd_level)

    p = sub.add_parser("verify", help="exhaustive property sweep over a shell")
    p.add_argument("--bound", type=int, default=10, help="|p| + q limit (>= 2)")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count", help="words of one length: arithmetic vs measured")
    p.add_argument("length", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_count)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
