"""Command-line front end.

Subcommands:

- ``enumerate``: build one monoid and emit its elements as JSON lines.
- ``count``: element counts over a range of n, as CSV, optionally
  checked against the closed formula.
- ``green``: Green's-relation class structure, optionally verified
  against the ideal-based oracle.
- ``rank``: confirm the 3-element generating set, optionally scanning
  all 1- and 2-element subsets.
- ``present show`` / ``present verify``: print a presentation, or
  enumerate its quotient and compare with the monoid.
- ``lemmas``: absorption identities as consequences of the wide
  presentation.
- ``tietze``: cross-derivability of the two presentations.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage
error, 3 enumeration hit its slot budget (inconclusive).
"""

import argparse
import csv
import json
import os
import sys

from .cache import default_cache_dir, load_or_build
from .congruence import (
    BudgetExceededError,
    DEFAULT_BUDGET_FACTOR,
    check_consequence,
    check_tietze_bridge,
    enumerate_quotient,
    verify_defines,
)
from .cycle import CycleMetric
from .green import green_J, green_LRH, green_oracle
from .monoid import (
    PAIR_SEARCH_BOUND,
    build_by_restrictions,
    cardinality_formula,
    rank_search,
)
from .presentations import absorption_relation_suites, build_Q, build_R

__all__ = ["main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _positive_n(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 3:
        raise argparse.ArgumentTypeError(f"n must be >= 3, got {n}")
    return n


def _n_range(text):
    """Parse '4' or '3..8' into an inclusive range."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, want N or A..B")
    if a < 3 or b < a:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: need 3 <= A <= B")
    return range(a, b + 1)


def _emit(obj, out):
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_cache_dir(args):
    if args.cache_dir:
        return args.cache_dir
    if os.environ.get("CYCLISO_CACHE_DIR"):
        return default_cache_dir()
    return None


def _get_monoid(n, method, cache_dir):
    if cache_dir is not None:
        monoid, _ = load_or_build(n, method, cache_dir)
        return monoid
    from .cache import BUILDERS

    return BUILDERS[method](n)


def cmd_enumerate(args):
    monoid = _get_monoid(args.n, args.method, _resolve_cache_dir(args))
    lines = [
        json.dumps(a.to_json(), separators=(",", ":")) for a in monoid.elements
    ]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_count(args):
    cache_dir = _resolve_cache_dir(args)
    rows = []
    mismatch = False
    for n in args.n:
        enumerated = len(_get_monoid(n, "restrictions", cache_dir))
        formula = cardinality_formula(n)
        ok = enumerated == formula
        mismatch = mismatch or not ok
        rows.append((n, enumerated, formula, "true" if ok else "false"))
    fh = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "enumerated", "formula", "match"])
        writer.writerows(rows)
    finally:
        if args.out:
            fh.close()
    if args.check_formula and mismatch:
        return EXIT_FAIL
    return EXIT_OK


def cmd_green(args):
    monoid = build_by_restrictions(args.n)
    metric = CycleMetric(args.n)
    if args.relation == "J":
        classes = green_J(monoid, metric)
    else:
        classes = green_LRH(monoid, args.relation)
    verified = None
    if args.verify_oracle:
        oracle = green_oracle(monoid, args.relation)
        verified = oracle.partition() == classes.partition()
    _emit(
        {
            "n": args.n,
            "relation": args.relation,
            "class_count": classes.class_count,
            "class_sizes_histogram": {
                str(k): v for k, v in classes.class_sizes_histogram().items()
            },
            "verified": verified,
        },
        args.out,
    )
    return EXIT_FAIL if verified is False else EXIT_OK


def cmd_rank(args):
    monoid = build_by_restrictions(args.n)
    report = rank_search(
        monoid, exhaustive_pairs=args.exhaustive_pairs, jobs=args.jobs
    )
    if not report.pair_search_ran:
        if args.exhaustive_pairs:
            pair_search = f"skipped: n > {PAIR_SEARCH_BOUND} exceeds the pair-scan bound"
        else:
            pair_search = "skipped: pass --exhaustive-pairs to run"
        message = "{g, h, e_n} generates" if report.triple_generates else "triple failed"
    else:
        pair_search = "ran"
        if report.minimum_is_three:
            message = "no generating set of size <= 2; {g, h, e_n} generates"
        else:
            message = "unexpected small generating set found"
    _emit(
        {
            "n": args.n,
            "size": report.size,
            "triple_generates": report.triple_generates,
            "singles_checked": report.singles_checked,
            "pairs_checked": report.pairs_checked,
            "generating_singles": list(report.generating_singles),
            "generating_pairs": [list(p) for p in report.generating_pairs],
            "pair_search": pair_search,
            "message": message,
        },
        args.out,
    )
    failed = not report.triple_generates or (
        report.pair_search_ran and not report.minimum_is_three
    )
    return EXIT_FAIL if failed else EXIT_OK


def _build_presentation(which, n):
    return build_R(n) if which == "R" else build_Q(n)


def cmd_present_show(args):
    _emit(_build_presentation(args.which, args.n).to_json(), args.out)
    return EXIT_OK


def cmd_present_verify(args):
    presentation = _build_presentation(args.which, args.n)
    monoid = build_by_restrictions(args.n)
    report = verify_defines(presentation, monoid, max_slots=args.max_slots)
    _emit(
        {
            "n": args.n,
            "which": args.which,
            "target_size": report.target_size,
            "quotient_size": report.quotient_size,
            "verdict": report.verdict,
            "slots_used": report.slots_used,
            "merges": report.merges,
            "wall_ms": round(report.wall_ms, 3),
        },
        args.out,
    )
    if report.verdict == "defines":
        return EXIT_OK
    if report.verdict == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_FAIL


def cmd_lemmas(args):
    presentation = build_R(args.n)
    budget = DEFAULT_BUDGET_FACTOR * cardinality_formula(args.n)
    try:
        table = enumerate_quotient(presentation, budget)
    except BudgetExceededError as exc:
        _emit({"n": args.n, "verdict": "inconclusive", "detail": str(exc)}, args.out)
        return EXIT_INCONCLUSIVE
    suites = {}
    all_pass = True
    for name, instances in absorption_relation_suites(args.n).items():
        failures = [
            label for label, lhs, rhs in instances
            if not check_consequence(table, lhs, rhs)
        ]
        all_pass = all_pass and not failures
        suites[name] = {"checked": len(instances), "failures": failures}
    _emit({"n": args.n, "suites": suites, "all_pass": all_pass}, args.out)
    return EXIT_OK if all_pass else EXIT_FAIL


def cmd_tietze(args):
    try:
        report = check_tietze_bridge(args.n, max_slots=args.max_slots)
    except BudgetExceededError as exc:
        _emit({"n": args.n, "verdict": "inconclusive", "detail": str(exc)}, args.out)
        return EXIT_INCONCLUSIVE
    _emit(
        {
            "n": args.n,
            "r_to_q": {
                "checked": len(report.r_to_q),
                "failures": [label for label, ok in report.r_to_q if not ok],
            },
            "q_to_r": {
                "checked": len(report.q_to_r),
                "failures": [label for label, ok in report.q_to_r if not ok],
            },
            "all_pass": report.ok,
        },
        args.out,
    )
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cycliso",
        description="Partial isometries of the n-cycle: enumeration, Green's "
        "structure, and presentation checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        if out:
            p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("enumerate", help="emit all elements as JSON lines")
    p.add_argument("--n", type=_positive_n, required=True)
    p.add_argument(
        "--method",
        choices=("restrictions", "closure", "bruteforce"),
        default="restrictions",
    )
    p.add_argument("--cache-dir", help="read/write the element cache here")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="element counts over a range of n, as CSV")
    p.add_argument("--n", type=_n_range, required=True, metavar="A..B")
    p.add_argument("--check-formula", action="store_true")
    p.add_argument("--cache-dir", help="read/write the element cache here")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("green", help="Green's relation classes")
    p.add_argument("--n", type=_positive_n, required=True)
    p.add_argument("--relation", choices=("L", "R", "H", "J"), required=True)
    p.add_argument("--verify-oracle", action="store_true")
    common(p)
    p.set_defaults(func=cmd_green)

    p = sub.add_parser("rank", help="generating-set checks")
    p.add_argument("--n", type=_positive_n, required=True)
    p.add_argument("--exhaustive-pairs", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("present", help="presentations")
    psub = p.add_subparsers(dest="present_command", required=True)
    q = psub.add_parser("show", help="print a presentation as JSON")
    q.add_argument("--n", type=_positive_n, required=True)
    q.add_argument("--which", choices=("R", "Q"), required=True)
    common(q)
    q.set_defaults(func=cmd_present_show)
    q = psub.add_parser("verify", help="enumerate the quotient and compare sizes")
    q.add_argument("--n", type=_positive_n, required=True)
    q.add_argument("--which", choices=("R", "Q"), required=True)
    q.add_argument("--max-slots", type=int)
    common(q)
    q.set_defaults(func=cmd_present_verify)

    p = sub.add_parser("lemmas", help="absorption identities as consequences")
    p.add_argument("--n", type=_positive_n, required=True)
    common(p)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("tietze", help="cross-derive the two presentations")
    p.add_argument("--n", type=_positive_n, required=True)
    p.add_argument("--max-slots", type=int)
    common(p)
    p.set_defaults(func=cmd_tietze)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
