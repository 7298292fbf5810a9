"""Command-line front end.

Subcommands::

    dim      dimension and canonical basis at one degree
    mul      product of two expressions
    realize  topological realization of an expression
    chart    dimension grid (ascii, json, csv or png) or weight-plane chart
    verify   run verification suites; writes a JSON report
    figures  render the standard figure album (png plus csv per chart)

Exit codes: 0 on success, 2 on usage or input errors, 3 when a verification
suite reports failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .expr import ParseError, RingConstraintError, parse, parse_ring_id, print_canonical, ring_spec
from .grading import MotDegree, RO2Degree
from .realize import re_bc2, re_ec2, re_point, re_tilde
from .verify import SUITES, Window, verify_all

_REALIZE = {
    "motivic": (re_point, "pt"),
    "ec2mot": (re_ec2, "ec2top"),
    "tildemot": (re_tilde, "tildetop"),
    "bc2": (re_bc2, "topbc2"),
}

DEFAULT_REPORT = "bredon2_verify.json"


class UsageError(Exception):
    pass


def _window_from_args(values: list[int] | None) -> Window:
    if not values:
        return Window.symmetric(8)
    if len(values) == 1:
        return Window.symmetric(values[0])
    if len(values) == 4:
        a0, a1, p0, p1 = values
        return Window(a0, a1, p0, p1, a0, a1, p0, p1)
    if len(values) == 8:
        return Window(*values)
    raise UsageError("--window takes 1, 4 or 8 integers")


def _degree_for(graded_by: str, deg: list[int], wt: list[int] | None):
    if graded_by == "ro2":
        if len(deg) != 2:
            raise UsageError("--deg takes two integers (a p) for this ring")
        return RO2Degree(*deg)
    if graded_by == "mot":
        if len(deg) != 2:
            raise UsageError("--deg takes two integers (a p) for this ring")
        if not wt or len(wt) != 2:
            raise UsageError("--wt B Q is required for this ring")
        return MotDegree(RO2Degree(*deg), RO2Degree(*wt))
    if graded_by == "bideg":
        if len(deg) != 2:
            raise UsageError("--deg takes two integers (a b) for this ring")
        return tuple(deg)
    if len(deg) != 1:
        raise UsageError("--deg takes one integer for this ring")
    return deg[0]


def cmd_dim(args) -> int:
    ring = parse_ring_id(args.ring)
    spec = ring_spec(ring)
    key = _degree_for(spec.graded_by, args.deg, args.wt)
    basis = spec.basis(key)
    names = [spec.mono_str(m) for m in basis]
    print(f"{len(basis)}:" + (" " + ", ".join(names) if names else ""))
    return 0


def cmd_mul(args) -> int:
    ring = parse_ring_id(args.ring)
    if ring.kind in ("tildetop", "tildemot", "b"):
        raise UsageError(
            f"ring {ring} is a module without internal products; multiply"
            " inside motivic or pt and use the module actions"
        )
    x = parse(ring, args.lhs)
    y = parse(ring, args.rhs)
    print(print_canonical(ring, x * y))
    return 0


def cmd_realize(args) -> int:
    ring = parse_ring_id(args.ring)
    if ring.kind not in _REALIZE:
        raise UsageError(
            f"no realization map from ring {ring}; choose one of "
            + ", ".join(sorted(_REALIZE))
        )
    fn, target = _REALIZE[ring.kind]
    x = parse(ring, args.expr)
    print(print_canonical(target, fn(x)))
    return 0


def cmd_chart(args) -> int:
    from . import chart

    window = _window_from_args(args.window)
    if args.plane:
        if args.format == "ascii":
            print(chart.ascii_plane(window))
        elif args.format == "json":
            _emit(chart.plane_to_json(window), args.out)
        elif args.format == "csv":
            _emit(chart.plane_to_csv(window), args.out)
        else:
            if not args.out:
                raise UsageError("--format png needs --out PATH")
            from .figures import render_plane

            print(render_plane(window, args.out))
        return 0
    if not args.ring:
        raise UsageError("chart needs --ring or --plane")
    ring = parse_ring_id(args.ring)
    weight = tuple(args.wt) if args.wt else None
    if args.format == "ascii":
        print(chart.ascii_chart(ring, window, weight))
    elif args.format == "json":
        cells = chart.build_cells(ring, window, weight)
        _emit(chart.cells_to_json(ring, window, cells, weight), args.out)
    elif args.format == "csv":
        cells = chart.build_cells(ring, window, weight)
        _emit(chart.cells_to_csv(cells), args.out)
    else:
        if not args.out:
            raise UsageError("--format png needs --out PATH")
        from .figures import render_ring_chart

        print(render_ring_chart(ring, window, args.out, weight))
    return 0


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
        print(out)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def cmd_verify(args) -> int:
    window = _window_from_args(args.window)
    if args.suite == "all":
        reports = verify_all(window, seed=args.seed, trials=args.trials)
    elif args.suite in SUITES:
        reports = [SUITES[args.suite](window, args.seed, args.trials)]
    else:
        raise UsageError(
            f"unknown suite {args.suite!r}; choose from "
            + ", ".join(["all", *SUITES])
        )

    failed = 0
    for rep in reports:
        status = "PASS" if rep.ok else "FAIL"
        print(f"{rep.suite:<12} {status}  {len(rep.checks)} checks,"
              f" {len(rep.failures)} failures")
        for check in rep.failures[:args.max_failures]:
            print(f"  FAIL {check.name} @ {check.location}:"
                  f" expected {check.expected}, got {check.actual}")
        if len(rep.failures) > args.max_failures:
            print(f"  ... {len(rep.failures) - args.max_failures} more")
        failed += len(rep.failures)

    total = sum(len(r.checks) for r in reports)
    doc = {
        "suites": [r.to_dict() for r in reports],
        "total": total,
        "passed": total - failed,
        "failed": failed,
    }
    report_path = Path(args.json)
    report_path.write_text(json.dumps(doc, indent=2))
    print(f"report written to {report_path}")

    if args.render:
        from .figures import render_album

        written = render_album(args.render, window)
        print(f"rendered {len(written)} figures to {args.render}")

    if failed:
        print(f"FAILED: {failed} of {total} checks")
        return 3
    print(f"all checks passed ({total})")
    return 0


def cmd_figures(args) -> int:
    from .figures import render_album

    window = _window_from_args(args.window)
    written = render_album(args.out, window)
    for path in written:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bredon2",
        description="Exact calculator for C2-equivariant (motivic) Bredon"
                    " cohomology rings with Z/2 coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ring_help = "ring id: pt, ec2top, tildetop, b(i), motivic, ec2mot," \
                " tildemot, bc2, cfield, topbc2"

    p = sub.add_parser("dim", help="dimension and basis at one degree")
    p.add_argument("--ring", required=True, help=ring_help)
    p.add_argument("--deg", required=True, type=int, nargs="+",
                   help="degree: a p (RO(C2) rings), a b (bidegree rings),"
                        " or a single integer (topbc2)")
    p.add_argument("--wt", type=int, nargs=2, metavar=("B", "Q"),
                   help="weight, for the four-graded rings")
    p.set_defaults(fn=cmd_dim)

    p = sub.add_parser("mul", help="multiply two expressions")
    p.add_argument("--ring", required=True, help=ring_help)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(fn=cmd_mul)

    p = sub.add_parser("realize", help="topological realization")
    p.add_argument("--ring", required=True,
                   help="source ring: motivic, ec2mot, tildemot or bc2")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("chart", help="dimension grid or weight-plane chart")
    p.add_argument("--ring", help=ring_help)
    p.add_argument("--plane", action="store_true",
                   help="chart the weight-plane regions instead of a ring")
    p.add_argument("--wt", type=int, nargs=2, metavar=("B", "Q"),
                   help="fixed weight for four-graded rings")
    p.add_argument("--window", type=int, nargs="+",
                   help="1 int (symmetric), 4 ints (xmin xmax ymin ymax)"
                        " or 8 ints (a p b q ranges); default 8")
    p.add_argument("--format", choices=("ascii", "json", "csv", "png"),
                   default="ascii")
    p.add_argument("--out", help="output file (required for png)")
    p.set_defaults(fn=cmd_chart)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", default="all",
                   help="all, " + ", ".join(SUITES))
    p.add_argument("--window", type=int, nargs="+",
                   help="window as for chart; default symmetric 8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000,
                   help="random trials for the axioms suite")
    p.add_argument("--json", default=DEFAULT_REPORT,
                   help=f"report file (default {DEFAULT_REPORT})")
    p.add_argument("--max-failures", type=int, default=10,
                   help="failing checks to print per suite")
    p.add_argument("--render", metavar="DIR",
                   help="also render the figure album into DIR")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("figures", help="render the standard figure album")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--window", type=int, nargs="+")
    p.set_defaults(fn=cmd_figures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ParseError, RingConstraintError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
