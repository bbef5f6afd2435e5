"""
Command-line entry point::

    pinnacle stats --perm "1 8 5 2 4 3 7 6"
    pinnacle count --set 4,7,9 --n 9 --algo dale
    pinnacle orderings --set 3,5,7
    pinnacle bench --csv out.csv

Exit status: 0 on success, 1 when an argument violates a precondition,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import admissible as adm
from .bench import TABLE1_SETS, BenchSpec, run_benchmark
from .counting import ALGORITHMS, count_by_ordering, count_vale_sets, enumerate_vale_sets
from .errors import DomainError, IntegrityError, UsageError
from .oracle import brute_count
from .orderings import count_orderings, enumerate_orderings
from .perm import (
    Permutation, cyclic_pinnacle_set, format_set, lift_to_cyclic, parse_set,
    parse_word, peak_set, pinnacle_set, vale_set,
)
from .selftest import run_selftest

ALGO_NAMES = {"dale": "dale", "comp": "composition", "composition": "composition",
              "vale": "vale", "closed": "closed", "brute": "brute"}


def _set_arg(text):
    try:
        return parse_set(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _braces(s) -> str:
    return "{" + format_set(s) + "}"


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def cmd_stats(args):
    p = Permutation(parse_word(args.perm))
    cyc = lift_to_cyclic(p)
    info = {
        "perm": str(p),
        "pinnacles": format_set(pinnacle_set(p)),
        "peaks": format_set(peak_set(p)),
        "vales": format_set(vale_set(p)),
        "vales_sentinel": format_set(vale_set(p, "sentinel")),
        "cyclic_lift": str(cyc),
        "cyclic_pinnacles": format_set(cyclic_pinnacle_set(cyc)),
    }
    _emit(args, info, [
        f"pinnacles {_braces(pinnacle_set(p))}",
        f"peaks {_braces(peak_set(p))}",
        f"vales {_braces(vale_set(p))}",
        f"vales (sentinel) {_braces(vale_set(p, 'sentinel'))}",
        f"cyclic lift {cyc} pinnacles {_braces(cyclic_pinnacle_set(cyc))}",
    ])


def cmd_admissible(args):
    if args.set is None and args.n is None:
        raise UsageError("admissible needs --set or --n")
    if args.set is not None:
        ok = adm.is_admissible(args.set)
        if args.n is not None and args.set and args.set[-1] > args.n:
            ok = False
        _emit(args, {"set": format_set(args.set), "admissible": ok},
              [f"{_braces(args.set)} admissible: {str(ok).lower()}"])
    else:
        c = adm.count_admissible(args.n)
        _emit(args, {"n": args.n, "count": str(c)}, [str(c)])


def cmd_enumerate(args):
    if args.n is None:
        raise UsageError("enumerate needs --n")
    sets = adm.enumerate_admissible(args.n)
    _emit(args, {"n": args.n, "count": str(len(sets)),
                 "sets": [format_set(s) for s in sets]},
          [_braces(s) for s in sets])


def cmd_count(args):
    if args.set is None or args.n is None:
        raise UsageError("count needs --set and --n")
    algo = ALGO_NAMES.get(args.algo)
    if algo is None:
        raise UsageError(f"unknown --algo {args.algo!r}")
    if args.ordering is not None:
        sigma = parse_word(args.ordering)
        value = count_by_ordering(args.set, args.n, sigma)
    elif algo == "brute":
        value = brute_count(args.set, args.n, override_guard=args.override_guards)
    else:
        value = ALGORITHMS[algo](args.set, args.n)
    _emit(args, {"set": format_set(args.set), "n": args.n, "algo": algo,
                 "count": str(value)}, [str(value)])


def _ordering_word(order) -> str:
    # one-digit values read unambiguously without separators
    if all(v < 10 for v in order):
        return "".join(map(str, order))
    return format_set(order)


def cmd_orderings(args):
    if args.set is None:
        raise UsageError("orderings needs --set")
    c = count_orderings(args.set)
    listed = enumerate_orderings(args.set, override_guard=args.override_guards)
    _emit(args, {"set": format_set(args.set), "count": str(c),
                 "orderings": [format_set(o) for o in listed]},
          [f"count {c}"] + [_ordering_word(o) for o in listed])


def cmd_valesets(args):
    if args.set is None or args.n is None:
        raise UsageError("valesets needs --set and --n")
    fam = enumerate_vale_sets(args.set, args.n)
    c = count_vale_sets(args.set, args.n)
    _emit(args, {"set": format_set(args.set), "n": args.n, "count": str(c),
                 "vale_sets": [format_set(t) for t in fam]},
          [f"count {c}"] + [_braces(t) for t in fam])


def cmd_bench(args):
    sets = args.sets or TABLE1_SETS
    algos = tuple(ALGO_NAMES.get(a, a) for a in (args.algos or ["vale", "comp"]))
    spec = BenchSpec(sets=sets, n=args.n or 1000, algorithms=algos,
                     repetitions=args.reps, warmup=args.warmup, time_cap=args.time_cap)

    def progress(row):
        print(f"{_braces(row.set)} {row.algo}: mean {row.mean_s:.3g}s "
              f"min {row.min_s:.3g}s over {row.reps}", file=sys.stderr)

    report = run_benchmark(spec, progress=progress)
    if args.csv:
        report.to_csv(args.csv)
    if args.json:
        print(report.to_json())
    else:
        sys.stdout.write(report.to_csv())


def cmd_selftest(args):
    results = run_selftest(args.max_n)
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return 0 if all(ok for _, ok in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pinnacle", description="Pinnacle sets of permutations")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--override-guards", action="store_true",
                       help="allow exhaustive sweeps past their size guards")
        return p

    p = common(sub.add_parser("stats", help="pinnacles, peaks and vales of a permutation"))
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_stats)

    p = common(sub.add_parser("admissible", help="test a set, or count admissible sets"))
    p.add_argument("--set", type=_set_arg)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_admissible)

    p = common(sub.add_parser("enumerate", help="list admissible pinnacle sets in [n]"))
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("count", help="permutations of [n] with pinnacle set S"))
    p.add_argument("--set", type=_set_arg)
    p.add_argument("--n", type=int)
    p.add_argument("--algo", default="comp", choices=sorted(ALGO_NAMES))
    p.add_argument("--ordering", help="restrict to this left-to-right pinnacle order")
    p.set_defaults(func=cmd_count)

    p = common(sub.add_parser("orderings", help="admissible orderings of S"))
    p.add_argument("--set", type=_set_arg)
    p.set_defaults(func=cmd_orderings)

    p = common(sub.add_parser("valesets", help="possible vale sets for pinnacle set S"))
    p.add_argument("--set", type=_set_arg)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_valesets)

    p = common(sub.add_parser("bench", help="time the counting algorithms"))
    p.add_argument("--set", dest="sets", type=_set_arg, action="append")
    p.add_argument("--n", type=int)
    p.add_argument("--algo", dest="algos", action="append", choices=sorted(ALGO_NAMES))
    p.add_argument("--reps", type=int, default=10)
    p.add_argument("--warmup", type=int, default=1)
    p.add_argument("--time-cap", type=float)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)

    p = common(sub.add_parser("selftest", help="check every formula against brute force"))
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args) or 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, IntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


parse_and_dispatch = main


if __name__ == "__main__":
    sys.exit(main())
