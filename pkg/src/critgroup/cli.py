"""Command-line interface: verify | group | snf | profile.

Exit codes: 0 all checks passed, 1 verification mismatch, 2 usage or parse
error, 3 internal certification failure (must never occur).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import is_prime, valuation
from .closedform import (
    classify_branch,
    critical_group_order,
    order_valuation,
    predicted_elementary_divisors,
    spectral_data,
    trivial_profile,
)
from .critical import (
    critical_group,
    mbar_filtration,
    profile_from_smith,
    spanning_tree_count,
    verify_mdim_identity,
)
from .graphs import kneser_graph, laplacian_matrix
from .intmat import determinant, smith_normal_form
from .mmio import MatrixMarketError, read_matrix_market, write_matrix_market
from .reports import (
    build_report,
    profile_str,
    report_json_obj,
    report_to_text,
    reports_to_csv,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critgroup",
        description="Exact critical group computation and closed-form verification for KG(n, 2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="cross-validate computed vs predicted groups for a range of n")
    p_verify.add_argument("n_min", type=int)
    p_verify.add_argument("n_max", type=int)
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.add_argument("--jobs", type=int, default=1, metavar="N")
    p_verify.add_argument("--i-max-extra", type=int, default=1, metavar="K")

    p_group = sub.add_parser("group", help="critical group of KG(n, 2)")
    p_group.add_argument("n", type=int)
    p_group.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p_snf = sub.add_parser("snf", help="Smith normal form of a Matrix Market file")
    p_snf.add_argument("path")
    p_snf.add_argument("--transforms", action="store_true")

    p_profile = sub.add_parser("profile", help="computed vs predicted p-elementary divisors for KG(n, 2)")
    p_profile.add_argument("n", type=int)
    p_profile.add_argument("p", type=int)
    p_profile.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_profile.add_argument("--i-max-extra", type=int, default=1, metavar="K")

    return parser


def cmd_verify(args, parser) -> int:
    if args.n_min < 5:
        parser.error(f"n_min must be at least 5, got {args.n_min}")
    if args.n_max < args.n_min:
        parser.error("n_max must be at least n_min")
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    if args.i_max_extra < 0:
        parser.error("--i-max-extra must be nonnegative")
    ns = list(range(args.n_min, args.n_max + 1))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_report_worker, [(n, args.i_max_extra) for n in ns]))
    else:
        reports = [build_report(n, args.i_max_extra) for n in ns]

    if args.format == "json":
        print(json.dumps([report_json_obj(r) for r in reports], indent=2))
    elif args.format == "csv":
        print(reports_to_csv(reports), end="")
    else:
        for r in reports:
            print(report_to_text(r), end="")
    return EXIT_OK if all(r.status == "pass" for r in reports) else EXIT_MISMATCH


def _report_worker(task: tuple[int, int]):
    n, extra = task
    return build_report(n, extra)


def cmd_group(args, parser) -> int:
    if args.n < 2:
        parser.error(f"n must be at least 2, got {args.n}")
    graph = kneser_graph(args.n)
    group = critical_group(laplacian_matrix(graph))
    trees = spanning_tree_count(graph)
    obj = {
        "n": args.n,
        "invariant_factors": list(group.invariant_factors),
        "free_rank": group.free_rank,
        "order": group.order,
        "spanning_trees": trees,
    }
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "invariant_factors", "free_rank", "order", "spanning_trees"])
        writer.writerow(
            [args.n, " ".join(map(str, group.invariant_factors)), group.free_rank, group.order, trees]
        )
    else:
        print(f"KG({args.n},2)")
        print(f"  critical group   : {group}")
        print(f"  invariant factors: {' '.join(map(str, group.invariant_factors)) or '-'}")
        print(f"  free rank        : {group.free_rank}")
        print(f"  torsion order    : {group.order}")
        print(f"  spanning trees   : {trees}")
    return EXIT_OK


def cmd_snf(args, parser) -> int:
    try:
        matrix = read_matrix_market(args.path)
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatrixMarketError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if matrix.rows == 0 or matrix.cols == 0:
        print("parse error: empty matrix", file=sys.stderr)
        return EXIT_USAGE

    snf = smith_normal_form(matrix, want_transforms=args.transforms)
    if args.transforms:
        u, v = snf.transforms
        if u @ matrix @ v != snf.diagonal_matrix() or abs(determinant(u)) != 1 or abs(determinant(v)) != 1:
            print("internal error: transform certification failed", file=sys.stderr)
            return EXIT_INTERNAL
    print(" ".join(map(str, snf.diagonal)))
    if args.transforms:
        print("U")
        print(write_matrix_market(snf.transforms[0], fmt="array"), end="")
        print("V")
        print(write_matrix_market(snf.transforms[1], fmt="array"), end="")
    return EXIT_OK


def cmd_profile(args, parser) -> int:
    if args.n < 5:
        parser.error(f"n must be at least 5, got {args.n}")
    if not is_prime(args.p):
        parser.error(f"p must be prime, got {args.p}")
    if args.i_max_extra < 0:
        parser.error("--i-max-extra must be nonnegative")
    n, p = args.n, args.p
    lap = laplacian_matrix(kneser_graph(n))
    snf = smith_normal_form(lap)
    computed = profile_from_smith(snf, p)

    divides = order_valuation(n, p) > 0
    if divides:
        predicted = predicted_elementary_divisors(n, p)
        branch = classify_branch(n, p).describe()
        note = None
    else:
        predicted = trivial_profile(n, p)
        try:
            branch = classify_branch(n, p).describe()
        except ValueError:
            branch = None
        note = f"{p} does not divide the group order {critical_group_order(n)}; trivial profile"

    sd = spectral_data(n)
    depth = max(
        1,
        valuation(sd.r, p),
        valuation(sd.s, p),
        max(computed.max_exponent, predicted.max_exponent) + args.i_max_extra,
    )
    filt = mbar_filtration(lap, p, depth)
    mdim_ok = verify_mdim_identity(computed, filt)
    match = computed.multiplicities == predicted.multiplicities

    if args.format == "json":
        obj = {
            "n": n,
            "p": p,
            "branch": branch,
            "note": note,
            "computed": {str(i): e for i, e in sorted(computed.multiplicities.items())},
            "predicted": {str(i): e for i, e in sorted(predicted.multiplicities.items())},
            "kernel_rank": computed.kernel_rank,
            "filtration_dims": list(filt.dims),
            "mdim_ok": mdim_ok,
            "match": match,
        }
        print(json.dumps(obj, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["n", "p", "branch", "computed_profile", "predicted_profile",
             "filtration_dims", "mdim_ok", "match"]
        )
        writer.writerow(
            [n, p, branch or "", profile_str(computed.multiplicities),
             profile_str(predicted.multiplicities),
             " ".join(map(str, filt.dims)), mdim_ok, match]
        )
    else:
        print(f"KG({n},2) at p={p}")
        if note:
            print(f"  note     : {note}")
        if branch:
            print(f"  branch   : {branch}")
        print(f"  computed : {profile_str(computed.multiplicities)} (kernel rank {computed.kernel_rank})")
        print(f"  predicted: {profile_str(predicted.multiplicities)}")
        print(f"  filtration dims: {' '.join(map(str, filt.dims))}")
        print(f"  mdim identity  : {'ok' if mdim_ok else 'FAIL'}")
        print(f"  match          : {'yes' if match else 'NO'}")
    return EXIT_OK if match and mdim_ok else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args, parser)
    if args.command == "group":
        return cmd_group(args, parser)
    if args.command == "snf":
        return cmd_snf(args, parser)
    if args.command == "profile":
        return cmd_profile(args, parser)
    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE  # pragma: no cover


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
