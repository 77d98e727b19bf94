"""Command line front end.

Subcommands cover the whole pipeline: construct a matrix with certified
girth, measure girth two independent ways, search minimum lift sizes,
check closed-form conditions, restructure into a two-level view, scan
the view for girth-capping patterns, and export expansions.

Exit codes: 0 success, 1 a verification or condition check failed,
2 unreadable or malformed input, 3 the request is infeasible
(unsupported parameters, no lift size, enumeration above cap).
"""

import argparse
import sys
from pathlib import Path

from .conditions import check_conditions
from .construct import SelectionStrategy, construct, nmin_search
from .errors import (
    BindCollisionError,
    ConstructionError,
    FormatError,
    MultiEdgeError,
    UnsupportedParametersError,
)
from .girth import girth_via_powers
from .oracle import girth_bfs_oracle, min_distance_nullspace
from .prelift import STRUCTURE_PATTERNS, matrix_prelift, prelift_admits_girth, scan_structures
from .qcfile import export_alist, parse_qc, render_qc

_WITNESS_LINES = 6


def _load(path):
    return parse_qc(Path(path).read_text())


def _need_bound(E, what):
    if not E.bound:
        raise FormatError(f"{what} needs a bound matrix (header with N)")
    return E


def _fmt_vals(values):
    return "{" + ",".join(str(v) for v in values) + "}"


def _cmd_construct(args):
    kind = {"smallest": "smallest", "random": "random", "abovemax": "above-max"}
    strategy = SelectionStrategy(
        kind=kind[args.strategy], seed=args.seed, monotone=args.monotone
    )
    result = construct(args.nc, args.nv, args.girth, strategy)
    sys.stdout.write(render_qc(result.matrix))
    print(f"n_min {result.n_min}")
    print(f"certificate ({len(result.certificate)} steps):")
    for rec in result.certificate:
        print(
            f"  ({rec.row},{rec.col}) = {rec.value}"
            f"  excluded {_fmt_vals(rec.forbidden)}"
            f"  doubled-excluded {_fmt_vals(rec.halved)}"
            f"  rejected {_fmt_vals(rec.rejected)}"
        )
    return 0


def _reports_agree(power, bfs):
    if power.girth is not None:
        return bfs.girth == power.girth
    return bfs.girth is None or bfs.girth > power.checked_up_to


def _cmd_girth(args):
    E = _need_bound(_load(args.file), "girth measurement")
    if args.max_girth < 4:
        raise FormatError(f"--max-girth must be at least 4, got {args.max_girth}")
    l_max = args.max_girth // 2
    reports = {}
    if args.method in ("bt", "both"):
        reports["power"] = girth_via_powers(E.to_block(), l_max=l_max)
        print(reports["power"])
    if args.method in ("bfs", "both"):
        reports["bfs"] = girth_bfs_oracle(E.expand())
        print(reports["bfs"])
        cyc = reports["bfs"].witnesses
        if cyc:
            print("cycle " + " ".join(f"{kind}{idx}" for kind, idx in cyc[0]))
    if args.method == "both":
        if not _reports_agree(reports["power"], reports["bfs"]):
            print("disagree: the two methods returned different girths")
            return 1
        print("agree")
    return 0


def _cmd_nmin(args):
    E = _load(args.file)
    result = nmin_search(E, args.girth, cap=args.cap)
    if result.status == "found":
        print(f"n_min {result.n_min}")
        return 0
    if result.status == "no-n":
        print("NoN: vanishing cycle sum over Z")
        length, walk = result.witness
        print(f"  closed walk of length {length}: {walk}")
        return 3
    print(f"NotFound: no lift size up to cap {result.cap}")
    return 3


def _cmd_check(args):
    E = _load(args.file)
    if args.girth % 2 or args.girth < 6:
        raise UnsupportedParametersError(
            f"girth {args.girth} is not a supported target"
        )
    failed = False
    for level in range(6, args.girth + 2, 2):
        report = check_conditions(E, level)
        if report.passed:
            print(f"girth-{level} conditions: pass")
            continue
        failed = True
        print(f"girth-{level} conditions: FAIL ({len(report.witnesses)} violations)")
        for name, value, labels in report.witnesses[:_WITNESS_LINES]:
            tags = ", ".join(str(lab) for lab in labels)
            print(f"  {name}: value {value} shared by {tags}")
        if len(report.witnesses) > _WITNESS_LINES:
            print(f"  ... {len(report.witnesses) - _WITNESS_LINES} more")
    print("result: " + ("FAIL" if failed else f"pass (girth >= {args.girth})"))
    return 1 if failed else 0


def _cmd_prelift(args):
    E = _need_bound(_load(args.file), "pre-lifting")
    try:
        view = matrix_prelift(E, args.n1)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    text = render_qc(view.matrix)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_structures(args):
    E = _load(args.file)
    scan = scan_structures(E)
    first = {}
    for name, rows, cols in scan.found:
        first.setdefault(name, (rows, cols))
    for name in STRUCTURE_PATTERNS:
        count = scan.counts[name]
        label = f"{name} all-one" if name in ("2x2", "2x3") else name
        if count == 0:
            print(f"no {label}")
        else:
            rows, cols = first[name]
            print(f"{label}: {count} (first at rows {rows} cols {cols})")
    for target in (14, 16, 18, 20, 22):
        g = prelift_admits_girth(E, target)
        girth_str = "acyclic" if g.pattern_girth is None else str(g.pattern_girth)
        verdict = "guaranteed" if g.guaranteed else "not guaranteed"
        print(f"girth-{target} {verdict} (pre-lift girth {girth_str})")
    return 0


def _cmd_expand(args):
    E = _need_bound(_load(args.file), "expansion")
    export_alist(E, args.alist)
    print(f"wrote {args.alist}")
    return 0


def _cmd_distance(args):
    E = _need_bound(_load(args.file), "distance computation")
    result = min_distance_nullspace(E.expand(), max_dim=args.max_dim)
    if result.status == "infeasible":
        print(f"Infeasible({result.dimension}): nullspace dimension above {args.max_dim}")
        return 3
    if result.status == "no-codewords":
        print("no nonzero codewords (nullspace dimension 0)")
        return 0
    print(f"distance {result.distance} (nullspace dimension {result.dimension})")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qcgirth",
        description="Construct and verify quasi-cyclic matrices with prescribed girth.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("construct", help="Build a matrix with certified girth.")
    p.add_argument("--nc", type=int, required=True, help="Number of block rows.")
    p.add_argument("--nv", type=int, required=True, help="Number of block columns.")
    p.add_argument("--girth", type=int, required=True, help="Target girth.")
    p.add_argument(
        "--strategy",
        choices=["smallest", "random", "abovemax"],
        default="smallest",
        help="How the next exponent is picked.",
    )
    p.add_argument("--seed", type=int, default=None, help="Seed for --strategy random.")
    p.add_argument(
        "--monotone",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Assume exponents grow along each row when excluding values.",
    )

    p = sub.add_parser("girth", help="Measure the girth of a bound matrix.")
    p.add_argument("file")
    p.add_argument(
        "--method",
        choices=["bt", "bfs", "both"],
        default="both",
        help="bt: power criterion on blocks; bfs: graph search; both: compare.",
    )
    p.add_argument(
        "--max-girth",
        type=int,
        default=22,
        help="Largest girth the power criterion certifies before reporting a bound.",
    )

    p = sub.add_parser("nmin", help="Smallest lift size reaching a target girth.")
    p.add_argument("file")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--cap", type=int, default=None, help="Stop scanning above this size.")

    p = sub.add_parser("check", help="Closed-form girth conditions, level by level.")
    p.add_argument("file")
    p.add_argument("--girth", type=int, required=True)

    p = sub.add_parser("prelift", help="Rewrite a matrix as a two-level view.")
    p.add_argument("file")
    p.add_argument("--n1", type=int, required=True, help="Pre-lift factor (divides N).")
    p.add_argument("--out", default=None, help="Write here instead of stdout.")

    p = sub.add_parser("structures", help="Scan for girth-capping patterns.")
    p.add_argument("file")

    p = sub.add_parser("expand", help="Export the 0/1 expansion in alist format.")
    p.add_argument("file")
    p.add_argument("--alist", required=True, help="Output path.")

    p = sub.add_parser("distance", help="Exact minimum distance of the expansion.")
    p.add_argument("file")
    p.add_argument(
        "--max-dim",
        type=int,
        default=28,
        help="Refuse enumeration above this nullspace dimension.",
    )
    return parser


_HANDLERS = {
    "construct": _cmd_construct,
    "girth": _cmd_girth,
    "nmin": _cmd_nmin,
    "check": _cmd_check,
    "prelift": _cmd_prelift,
    "structures": _cmd_structures,
    "expand": _cmd_expand,
    "distance": _cmd_distance,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.cmd](args)
    except (FormatError, BindCollisionError, MultiEdgeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedParametersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
