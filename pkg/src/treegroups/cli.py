"""Command-line front end.

Exit codes: 0 for success / equal / all checks passed, 1 for unequal or any
failed check, 2 for usage or parse errors.  Results go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .terms import (
    TermError,
    catalan_signature,
    format_term,
    generalized_catalan,
    enumerate_terms,
    normalize_to_lmb,
    parse_term,
    rank,
    step_rank_drop,
    apply_assoc,
)
from .operators import EMPTY
from .coherence import (
    check_axioms,
    check_coherence,
    check_moore,
    eval_diagram,
    parse_word,
    theory_for,
    word_operator,
    words_equal,
)
from .diagrams import to_dot, to_json


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treegroups")
    top = parser.add_subparsers(dest="group", required=True)

    term = top.add_parser("term", help="term normalization and rank")
    term_sub = term.add_subparsers(dest="command", required=True)
    p = term_sub.add_parser("normalize")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("term", nargs="+")
    p = term_sub.add_parser("rank")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("term", nargs="+")

    trees = top.add_parser("trees", help="shape counting")
    trees_sub = trees.add_subparsers(dest="command", required=True)
    p = trees_sub.add_parser("count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    op = top.add_parser("op", help="operator composition")
    op_sub = op.add_subparsers(dest="command", required=True)
    p = op_sub.add_parser("compose")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=("c", "sc"), required=True)
    p.add_argument("word", nargs="+")

    word = top.add_parser("word", help="word evaluation and equality")
    word_sub = word.add_subparsers(dest="command", required=True)
    p = word_sub.add_parser("eval")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=("c", "sc"), required=True)
    p.add_argument("word", nargs="+")
    p = word_sub.add_parser("eq")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=("c", "sc"), required=True)
    p.add_argument("w1", nargs="+")

    check = top.add_parser("check", help="axiom, coherence, and symmetric-group suites")
    check_sub = check.add_subparsers(dest="command", required=True)
    p = check_sub.add_parser("axioms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=("c", "sc"), required=True)
    p.add_argument("--max-addr", type=int, default=2)
    p = check_sub.add_parser("coherence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-nodes", type=int, default=4)
    p = check_sub.add_parser("moore")
    p.add_argument("--n", type=int, required=True)

    export = top.add_parser("export", help="Graphviz export")
    export_sub = export.add_subparsers(dest="command", required=True)
    p = export_sub.add_parser("dot")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theory", choices=("c", "sc"), required=True)
    p.add_argument("word", nargs="+")

    return parser


def run(argv) -> int:
    argv = list(argv)
    second_word = None
    if argv[:2] == ["word", "eq"]:
        if "--" not in argv[2:]:
            print("word eq needs two words separated by --", file=sys.stderr)
            return 2
        split = argv.index("--", 2)
        argv, tail = argv[:split], argv[split + 1 :]
        second_word = " ".join(tail)

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        return _dispatch(args, second_word)
    except TermError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, second_word) -> int:
    if args.group == "term":
        signature = catalan_signature(args.n)
        term = parse_term(" ".join(args.term), signature)
        if args.command == "rank":
            print(rank(term))
            return 0
        normal, steps = normalize_to_lmb(term, args.n)
        ranks = [rank(term)]
        current = term
        for i, address in steps:
            ranks.append(ranks[-1] - step_rank_drop(current, i, address))
            current = apply_assoc(current, i, address)
        print(format_term(normal, signature))
        print(f"steps {len(steps)}")
        print("ranks " + " ".join(str(r) for r in ranks))
        return 0

    if args.group == "trees":
        counted = len(enumerate_terms(args.n, args.k))
        formula = generalized_catalan(args.n, args.k)
        status = "OK" if counted == formula else "MISMATCH"
        print(f"{counted} {formula} {status}")
        return 0 if counted == formula else 1

    if args.group == "op":
        theory = theory_for(args.theory, args.n)
        op = word_operator(parse_word(" ".join(args.word)), theory)
        if op is EMPTY:
            print("empty")
        else:
            signature = theory.signature
            print(
                f"{format_term(op.source, signature)} -> "
                f"{format_term(op.target, signature)}"
            )
        return 0

    if args.group == "word":
        if args.command == "eval":
            diagram = eval_diagram(parse_word(" ".join(args.word)), args.n, args.theory)
            print(to_json(diagram))
            return 0
        w1 = parse_word(" ".join(args.w1))
        w2 = parse_word(second_word)
        equal = words_equal(w1, w2, args.n, args.theory)
        print("equal" if equal else "unequal")
        return 0 if equal else 1

    if args.group == "check":
        if args.command == "axioms":
            ok, lines = check_axioms(args.n, args.theory, args.max_addr)
        elif args.command == "coherence":
            ok, lines = check_coherence(args.n, args.max_nodes)
        else:
            ok, lines = check_moore(args.n)
        for line in lines:
            print(line)
        print("all-pass" if ok else "some-fail")
        return 0 if ok else 1

    if args.group == "export":
        diagram = eval_diagram(parse_word(" ".join(args.word)), args.n, args.theory)
        print(to_dot(diagram), end="")
        return 0

    raise AssertionError("unreachable")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
