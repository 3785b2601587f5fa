"""Command-line interface.

Exit codes: 0 success / found / verified, 1 negative result (not Hadamard,
ProvenNone), 2 usage or I/O error, 3 search budget exhausted. Results go to
stdout; timing goes to stderr.
"""
from __future__ import annotations

import argparse
import sys

from hadamard_kit import census as census_mod
from hadamard_kit import constructions, search
from hadamard_kit.errors import HadamardKitError
from hadamard_kit.hmat import format_hmat, read_hmat, write_hmat
from hadamard_kit.matrix_core import gram, inner_product, is_balanced, overlap, verify_hadamard
from hadamard_kit.orthogonality import Verdict, classify_order, predicted_orthogonal_number

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _emit(matrix, path, comments=()):
    report = verify_hadamard(matrix)
    if not report.is_hadamard:
        print(f"refusing to write matrix: {report.describe()}", file=sys.stderr)
        return EXIT_NEGATIVE
    if path:
        write_hmat(path, matrix, comments)
    else:
        sys.stdout.write(format_hmat(matrix, comments))
    return EXIT_OK


def cmd_construct(args):
    if args.method == "sylvester":
        if args.order is None:
            raise UsageError("--method sylvester needs --order")
        m = constructions.sylvester(args.order)
        label = f"sylvester({args.order})"
    elif args.method == "paley":
        if args.prime is None:
            raise UsageError("--method paley needs --prime")
        m = constructions.paley_one(args.prime)
        label = f"paley({args.prime})"
    elif args.method == "kron":
        if not (args.left and args.right):
            raise UsageError("--method kron needs --left FILE and --right FILE")
        m = constructions.kronecker(read_hmat(args.left), read_hmat(args.right))
        label = "kron"
    else:
        if args.order is None:
            raise UsageError("--method auto needs --order")
        plan = constructions.plan_order(args.order)
        if plan is None:
            print(f"order {args.order} is not reachable by the available constructions",
                  file=sys.stderr)
            return EXIT_NEGATIVE
        m = plan.build()
        label = str(plan)
    return _emit(m, args.output, [f"construction: {label}"])


def cmd_verify(args):
    m = read_hmat(args.file)
    report = verify_hadamard(m)
    print(report.describe())
    if args.gram:
        g = gram(m)
        width = max(len(str(int(x))) for x in g.flat)
        for row in g.tolist():
            print(" ".join(str(x).rjust(width) for x in row))
    return EXIT_OK if report.is_hadamard else EXIT_NEGATIVE


def cmd_orthnum(args):
    m = read_hmat(args.file)
    for flag, idx in (("--row-a", args.row_a), ("--row-b", args.row_b)):
        if not 0 <= idx < m.n_rows:
            raise UsageError(f"{flag} {idx} out of range for {m.n_rows} rows (0-based)")
    u, v = m.rows[args.row_a], m.rows[args.row_b]
    g = inner_product(u, v)
    print(f"g = {g}")
    if is_balanced(u) and is_balanced(v):
        k = overlap(u, v)
        predicted = predicted_orthogonal_number(u.length, k)
        print(f"k = {k}")
        print(f"4k - n = {predicted}")
        print("AGREE" if predicted == g else "DISAGREE")
    else:
        print("k = N-A")
        print("4k - n = N-A")
        print("N-A")
    return EXIT_OK


def cmd_classify(args):
    c = classify_order(args.order)
    print(f"{c.order}: {c} ({c.reason})")
    return EXIT_OK


def _print_outcome(outcome):
    print(f"status: {outcome.status.value}")
    print(f"nodes: {outcome.nodes_visited}")
    print(f"elapsed: {outcome.elapsed:.3f}s", file=sys.stderr)


def cmd_search(args):
    mode = search.Mode.EXHAUSTIVE_NONEXISTENCE if args.mode == "exhaustive" else search.Mode.FIRST_SOLUTION
    if mode is search.Mode.EXHAUSTIVE_NONEXISTENCE and args.order > search.MAX_EXHAUSTIVE_ORDER:
        raise UsageError(
            f"exhaustive mode is limited to n <= {search.MAX_EXHAUSTIVE_ORDER}; use --mode first"
        )
    config = search.SearchConfig(args.order, mode, args.max_nodes, args.max_seconds, args.parallel)
    outcome = search.run(config)
    _print_outcome(outcome)
    if outcome.status is search.Status.FOUND:
        if args.output:
            write_hmat(args.output, outcome.matrix, ["search: Found"])
        else:
            sys.stdout.write(format_hmat(outcome.matrix))
        return EXIT_OK
    if outcome.status is search.Status.BUDGET_EXHAUSTED:
        print(f"deepest partial matrix: {outcome.depth} rows")
        return EXIT_BUDGET
    return EXIT_NEGATIVE


def cmd_partial(args):
    outcome = search.max_partial_rows(args.order, args.max_nodes, args.max_seconds)
    qualifier = "exact" if outcome.exact else "lower bound"
    sign = "=" if outcome.exact else ">="
    print(f"r({args.order}) {sign} {outcome.rank} ({qualifier})")
    print(f"nodes: {outcome.nodes_visited}")
    print(f"elapsed: {outcome.elapsed:.3f}s", file=sys.stderr)
    if args.output:
        write_hmat(args.output, outcome.matrix, [f"partial rank witness, r = {outcome.rank}"])
    return EXIT_OK


def cmd_census(args):
    report = census_mod.census(args.k)
    print("\n".join(report.lines()))
    return EXIT_OK


def cmd_scan(args):
    if args.limit < 1:
        raise UsageError("--limit must be positive")
    covered = set(constructions.reachable_orders(args.limit))
    print(f"{'n':>5}  {'class':<16} {'verdict':<18} constructed")
    gaps = []
    for n in range(1, args.limit + 1):
        c = classify_order(n)
        built = n in covered
        if c.verdict is Verdict.POSSIBLE_CANDIDATE and not built:
            gaps.append(n)
        print(f"{n:>5}  {c.kind.value:<16} {c.verdict.value:<18} {'yes' if built else 'no'}")
    candidates = sum(1 for n in range(4, args.limit + 1, 4))
    print(f"multiples of 4 constructed: {candidates - len(gaps)} of {candidates}")
    print("gaps: " + (" ".join(str(g) for g in gaps) if gaps else "none"))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="hadamard-kit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a Hadamard matrix and write it as HMAT")
    p.add_argument("--method", choices=["sylvester", "paley", "kron", "auto"], required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--prime", type=int)
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check M M^T = n I for an HMAT file")
    p.add_argument("file")
    p.add_argument("--gram", action="store_true", help="print the full Gram matrix")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orthnum", help="inner product of two rows (0-based) and the 4k - n prediction")
    p.add_argument("file")
    p.add_argument("--row-a", type=int, required=True)
    p.add_argument("--row-b", type=int, required=True)
    p.set_defaults(func=cmd_orthnum)

    p = sub.add_parser("classify", help="classify an order by n mod 4")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="backtracking search for a normalized Hadamard matrix")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--mode", choices=["first", "exhaustive"], default="first")
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("partial", help="largest number of pairwise orthogonal rows r(n)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_partial)

    p = sub.add_parser("census", help="row-selection counts for order 4k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("scan", help="classification and construction coverage for n <= limit")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        parser.error(str(err))
    except (HadamardKitError, OSError) as err:
        print(f"hadamard-kit: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
