"""Command-line surface.

Exit codes are a stable contract for scripting: 0 for accept/pass/equal,
1 for reject/fail/unequal, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .crosscheck import ORACLES, machine_accepts, render_input, run_crosscheck
from .grammars import cfg_enumerate
from .machines import catalog
from .munn import equal_in_fim, multiply_munn, munn_to_dot, munn_tree
from .rank1 import evaluate_rank1, multiply_rank1
from .witnesses import PumpingCase, pumping_case_member
from .words import (
    HASH,
    MarkedWord,
    RankError,
    Word,
    WordSyntaxError,
    marked_symbols,
    parse_any,
    pretty,
    rank1_symbols,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fimlab",
        description="Word problems of free inverse monoids: evaluate words, "
        "render Munn trees, and run the machine catalog.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a word: triple for rank 1, tree summary above")
    p.add_argument("word")
    p.add_argument("--rank", type=int, default=1)

    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--rank", type=int, default=1)

    p = sub.add_parser("mul", help="multiply two words and summarize the product")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--rank", type=int, default=1)

    p = sub.add_parser("munn-dot", help="write the Munn tree of a word as Graphviz DOT")
    p.add_argument("word")
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("member", help="run a catalog machine on an input")
    p.add_argument("machine", metavar="MACHINE")
    p.add_argument("input", help="word text; two-tape machines take 'u,v'")
    p.add_argument("--bound", type=int, default=None, help="stack bound for csa machines")
    p.add_argument("--oracle", action="store_true", help="also run the semantic oracle")

    p = sub.add_parser("crosscheck", help="sweep a machine against its oracle")
    p.add_argument("machine", metavar="MACHINE")
    p.add_argument("bound", type=int)
    p.add_argument("--out", type=Path, default=None, help="also write the report here")

    p = sub.add_parser("pump", help="verify the pumped witness-family table")
    p.add_argument("--form", type=int, choices=(1, 2, 3), default=None)
    p.add_argument("--n", nargs=2, type=int, default=(5, 8), metavar=("MIN", "MAX"))
    p.add_argument("--i", nargs=2, type=int, default=(0, 2), metavar=("MIN", "MAX"))
    p.add_argument("--j", nargs=2, type=int, default=(0, 2), metavar=("MIN", "MAX"))
    p.add_argument("--m", nargs=2, type=int, default=(-1, 3), metavar=("MIN", "MAX"))
    p.add_argument("--quiet", action="store_true", help="print only the summary")

    p = sub.add_parser("sample", help="list a grammar machine's language up to a length")
    p.add_argument("machine", metavar="MACHINE")
    p.add_argument("bound", type=int)
    p.add_argument("--limit", type=int, default=None)

    return parser


def _entry(name: str):
    cat = catalog()
    if name not in cat:
        raise SystemExit2(f"unknown machine {name!r}; known: {', '.join(cat)}")
    return cat[name]


class SystemExit2(Exception):
    """Usage-level error; rendered to stderr with exit code 2."""


def _parse_machine_input(entry, text: str):
    if entry.domain == "pairs":
        if "," not in text:
            raise SystemExit2(f"machine {entry.name} takes a pair 'u,v'")
        left, right = text.split(",", 1)
        return (rank1_symbols(Word.parse(left, 1)), rank1_symbols(Word.parse(right, 1)))
    parsed = parse_any(text, 1)
    if isinstance(parsed, MarkedWord):
        if entry.domain == "words":
            raise SystemExit2(f"machine {entry.name} takes a plain word, not a marked one")
        return marked_symbols(parsed)
    return rank1_symbols(parsed)


def cmd_eval(args) -> int:
    word = Word.parse(args.word, args.rank)
    if args.rank == 1:
        print(evaluate_rank1(word))
        return 0
    tree = munn_tree(word, args.rank)
    print(
        f"{len(tree.vertices)} vertices, {len(tree.edges)} edges, "
        f"ω = {pretty(tree.omega, args.rank)}"
    )
    return 0


def cmd_eq(args) -> int:
    u = Word.parse(args.u, args.rank)
    v = Word.parse(args.v, args.rank)
    if equal_in_fim(u, v, args.rank):
        print("equal")
        return 0
    print("not equal")
    return 1


def cmd_mul(args) -> int:
    u = Word.parse(args.u, args.rank)
    v = Word.parse(args.v, args.rank)
    if args.rank == 1:
        print(multiply_rank1(evaluate_rank1(u), evaluate_rank1(v)))
        return 0
    tree = multiply_munn(munn_tree(u, args.rank), munn_tree(v, args.rank))
    print(
        f"{len(tree.vertices)} vertices, {len(tree.edges)} edges, "
        f"ω = {pretty(tree.omega, args.rank)}"
    )
    return 0


def cmd_munn_dot(args) -> int:
    word = Word.parse(args.word, args.rank)
    dot = munn_to_dot(munn_tree(word, args.rank), args.rank)
    if args.out is None:
        print(dot, end="")
    else:
        args.out.write_text(dot, encoding="utf-8")
        print(f"wrote {args.out}")
    return 0


def cmd_member(args) -> int:
    entry = _entry(args.machine)
    item = _parse_machine_input(entry, args.input)
    if entry.kind == "csa" and args.bound is not None:
        from .csa import csa_accepts

        tapes = (item,) if entry.domain != "pairs" else item
        got = csa_accepts(entry.spec, tapes, stack_bound=args.bound)
    else:
        got = machine_accepts(entry, item)
    print("accept" if got else "reject")
    if args.oracle:
        _, oracle = ORACLES[entry.name]
        want = oracle(item)
        print(f"oracle: {'accept' if want else 'reject'}")
        if got != want:
            print("MISMATCH", file=sys.stderr)
            return 1
    return 0 if got else 1


def cmd_crosscheck(args) -> int:
    report = run_crosscheck(args.machine, args.bound)
    text = report.to_text()
    print(text, end="")
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8")
    return 0 if report.status == "pass" else 1


def cmd_pump(args) -> int:
    forms = (args.form,) if args.form else (1, 2, 3)
    n_lo, n_hi = args.n
    i_lo, i_hi = args.i
    j_lo, j_hi = args.j
    m_lo, m_hi = args.m
    cases = []
    for form in forms:
        for n in range(n_lo, n_hi + 1):
            for i in range(i_lo, i_hi + 1):
                for j in range(j_lo, j_hi + 1):
                    if i == 0 and j == 0:
                        continue
                    for m in range(m_lo, m_hi + 1):
                        try:
                            cases.append(PumpingCase(form, n, i, j, m))
                        except ValueError:
                            pass  # negative block length under extreme ranges
    if not cases:
        raise SystemExit2("no valid pumping cases in the requested ranges (not both i and j may be zero)")
    contradictions = 0
    checked = 0
    for case in cases:
        member = pumping_case_member(case)
        excluded = case.table_excluded()
        if excluded:
            checked += 1
        bad = excluded and member
        contradictions += bad
        if not args.quiet:
            status = "CONTRADICTION" if bad else ("excluded" if excluded else "unconstrained")
            verdict = "in" if member else "out"
            print(
                f"form={case.form} n={case.n} i={case.i} j={case.j} m={case.m} "
                f"{case.word().to_text(1)} -> {verdict} [{status}]"
            )
    print(f"{len(cases)} cases, {checked} covered by the table, {contradictions} contradictions")
    return 1 if contradictions else 0


def cmd_sample(args) -> int:
    entry = _entry(args.machine)
    if entry.kind != "grammar":
        raise SystemExit2(f"machine {entry.name} is not a grammar")
    strings = sorted(cfg_enumerate(entry.spec, args.bound), key=lambda s: (len(s), s))
    if args.limit is not None:
        strings = strings[: args.limit]
    for s in strings:
        print(render_input(entry, s) if s else "ε")
    return 0


_COMMANDS = {
    "eval": cmd_eval,
    "eq": cmd_eq,
    "mul": cmd_mul,
    "munn-dot": cmd_munn_dot,
    "member": cmd_member,
    "crosscheck": cmd_crosscheck,
    "pump": cmd_pump,
    "sample": cmd_sample,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (WordSyntaxError, RankError, SystemExit2, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
