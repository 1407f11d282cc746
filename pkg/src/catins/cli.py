"""Command-line entry point: ``catins <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from catins import chains, frobenius, poset, verify
from catins.catabolism import COLUMN, ROW, catabolizable_set, dominance_maxima, is_catabolizable
from catins.cocharge import cocharge_label, standard_word_from_labeling
from catins.core import (
    check_standard_word,
    conjugate,
    format_partition,
    parse_partition,
    parse_word,
    row_insert,
)
from catins.insertion import F, algorithm3_trace, run_F


class UsageError(Exception):
    pass


def _word(args) -> tuple[int, ...]:
    """Standard word from the ``word`` argument, unlabeling if ``--labeled``."""
    w = parse_word(args.word)
    if getattr(args, "labeled", False):
        return standard_word_from_labeling(w)
    return check_standard_word(w)


def _compact(word) -> str:
    if not word:
        return "∅"
    sep = "" if all(0 <= v < 10 for v in word) else " "
    return sep.join(map(str, word))


def _nu_grid(nu) -> str:
    if not nu:
        return "∅"
    return "/".join(_compact([i] * part) for i, part in enumerate(nu))


def _print_trace(trace) -> None:
    rows = [("i", "word", "nu"), ("0", _compact(trace.initial), "∅")]
    for s in trace.steps:
        rows.append((str(s.index), _compact(s.result.word), _nu_grid(s.result.nu)))
    w0 = max(len(r[0]) for r in rows)
    w1 = max(len(r[1]) for r in rows)
    for r in rows:
        print(f"{r[0].rjust(w0)}  {r[1].ljust(w1)}  {r[2]}".rstrip())


def cmd_label(args) -> int:
    print(" ".join(map(str, cocharge_label(check_standard_word(parse_word(args.word))))))
    return 0


def cmd_unlabel(args) -> int:
    print(" ".join(map(str, standard_word_from_labeling(parse_word(args.word)))))
    return 0


def cmd_cocharge(args) -> int:
    print(sum(cocharge_label(_word(args))))
    return 0


def cmd_insert(args) -> int:
    t = row_insert(_word(args))
    print(t.to_json() if args.json else t.grid())
    return 0


def cmd_ctype(args) -> int:
    print(format_partition(F(_word(args))))
    return 0


def cmd_F(args) -> int:
    w = _word(args)
    lam, trace = run_F(w)
    if args.json:
        print(json.dumps({"input": list(w), "result": list(lam), "trace": trace.to_dict()}))
        return 0
    if args.trace:
        _print_trace(trace)
    print(format_partition(lam))
    return 0


def cmd_cat3(args) -> int:
    w = _word(args)
    ok, trace = algorithm3_trace(w, parse_partition(args.shape))
    if args.json:
        print(json.dumps({"input": list(w), "result": ok, "trace": trace.to_dict()}))
        return 0
    if args.trace:
        _print_trace(trace)
    print(str(ok).lower())
    return 0


def cmd_catcheck(args) -> int:
    t = row_insert(_word(args))
    print(str(is_catabolizable(t, parse_partition(args.shape), args.mode)).lower())
    return 0


def cmd_catset(args) -> int:
    shapes = catabolizable_set(row_insert(_word(args)))
    if args.json:
        print(json.dumps({"result": [list(s) for s in sorted(shapes, reverse=True)],
                          "maximum": [list(s) for s in dominance_maxima(shapes)]}))
        return 0
    for s in sorted(shapes, reverse=True):
        print(format_partition(s))
    print("maximum: " + "; ".join(format_partition(s) for s in dominance_maxima(shapes)))
    return 0


def _format_chain(chain, n) -> str:
    return "(" + ", ".join(f"{j}[r{j % n}]" for j in chain) + ")"


def cmd_greene(args) -> int:
    w = _word(args)
    z = cocharge_label(w)
    n = len(z)
    if args.lengths:
        target = conjugate(F(w))
        fam = chains.family_with_lengths(z, target)
        if args.json:
            print(json.dumps({"input": list(w), "lengths": list(target),
                              "result": None if fam is None else [list(c) for c in fam.chains]}))
            return 0
        print("lengths " + format_partition(target))
        if fam is None:
            print("no family")
        else:
            for c in fam.chains:
                print(_format_chain(c, n))
        return 0
    if args.k is None:
        raise UsageError("greene needs --k or --lengths")
    size, fam = chains.max_family(z, args.k)
    if args.json:
        print(json.dumps({"input": list(w), "k": args.k, "result": size,
                          "family": [list(c) for c in fam.chains]}))
        return 0
    print(f"I_{args.k} = {size}")
    for c in fam.chains:
        print(_format_chain(c, n))
    return 0


def cmd_poset(args) -> int:
    overlay = None if args.overlay == "none" else args.overlay
    if args.dot:
        text = poset.export_dot(args.n, overlay)
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            with open(args.dot, "w") as fh:
                fh.write(text)
            print(f"wrote {args.dot}")
        return 0
    if args.json:
        print(poset.export_json(args.n))
        return 0
    report = poset.verify_graded(args.n)
    zero = sum(e.zero for e in poset.cocyclage_edges(args.n))
    print(f"nodes {report.nodes}")
    print(f"edges {report.edges} ({zero} zero)")
    print(f"rank range {report.rank_range[0]}..{report.rank_range[1]}")
    print(f"graded {str(report.ok).lower()}")
    return 0


def cmd_frobenius(args) -> int:
    lam = parse_partition(args.shape)
    table = frobenius.frobenius_table(lam)
    print(frobenius.table_json(lam, table) if args.json else frobenius.format_table(table))
    return 0


def cmd_verify(args) -> int:
    start = time.perf_counter()
    failed = []

    def show(res):
        status = "PASS" if res.passed else "FAIL"
        print(f"{status}  n={res.n}  {res.name}  ({res.checked} cases)")
        print(f"  {res.seconds:.3f}s", file=sys.stderr)
        if not res.passed:
            failed.append(res)
            print(f"  counterexample: {res.counterexample!r}")

    results = verify.run_suite(args.n, show)
    total = sum(r.checked for r in results)
    print(f"{len(results) - len(failed)}/{len(results)} checks passed, {total} cases")
    print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catins", description="Catabolizability of standard tableaux.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help, labeled=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("word", help='whitespace-separated integers, e.g. "1 6 8 4 2 9 5 7 3"')
        if labeled:
            p.add_argument("--labeled", action="store_true", help="the word is a cocharge labeling")
        p.set_defaults(func=func)
        return p

    word_cmd("label", cmd_label, "print the cocharge labeling", labeled=False)
    word_cmd("unlabel", cmd_unlabel, "recover the standard word from a labeling", labeled=False)
    word_cmd("cocharge", cmd_cocharge, "print the cocharge")
    word_cmd("insert", cmd_insert, "print P(w)").add_argument("--json", action="store_true")
    word_cmd("ctype", cmd_ctype, "print ctype(P(w))")

    p = word_cmd("F", cmd_F, "run the catabolism insertion algorithm")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")

    p = word_cmd("cat3", cmd_cat3, "bounded insertion: is P(w) λ-catabolizable?")
    p.add_argument("shape", help="partition, e.g. 3,2,1")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")

    p = word_cmd("catcheck", cmd_catcheck, "definitional λ-catabolizability of P(w)")
    p.add_argument("shape")
    p.add_argument("--mode", choices=[ROW, COLUMN], default=ROW)

    word_cmd("catset", cmd_catset, "all λ for which P(w) is λ-catabolizable").add_argument(
        "--json", action="store_true")

    p = word_cmd("greene", cmd_greene, "maximum k-bounded chain family")
    p.add_argument("--k", type=int)
    p.add_argument("--lengths", action="store_true", help="family with the conjugate ctype lengths")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("poset", help="cocyclage poset on SYT(n)")
    p.add_argument("n", type=int)
    p.add_argument("--dot", metavar="FILE", help="write DOT ('-' for stdout)")
    p.add_argument("--overlay", choices=["none", "ctype"], default="none")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("frobenius", help="Frobenius series table of R_λ")
    p.add_argument("shape")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("verify", help="exhaustive verification sweep")
    p.add_argument("--n", type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, IndexError, UsageError) as exc:
        print(f"catins {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
