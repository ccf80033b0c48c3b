"""Command-line front end.

Exit codes: 0 stable up to ``--n-max``, 10 possibly unstable, 2 usage or
spec error (also any other failure such as an unwritable output path).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .exact import FROM_LEFT, FROM_RIGHT, UniPoly, format_rational, parse_rational
from .model import DispersionSpec, SpecError, bifurcation_speed
from .reduce import build_reduced, instantiate, reduction_triangle
from .stability import DEFAULT_N_MAX, DEFAULT_TOL, ModeVerdict, analyze
from .sturm import build_chain, count_roots_open, count_variations, isolate_and_refine
from .sweep import Axis, SweepGrid, SweepFileError, cells_to_csv, cells_to_json, read_sweep, run_sweep

EXIT_STABLE, EXIT_UNSTABLE, EXIT_USAGE = 0, 10, 2

_SIGN = {1: "+", -1: "-", 0: "0"}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt_interval(a: Fraction, b: Fraction) -> str:
    return f"({format_rational(a)}, {format_rational(b)})"


def sign_table(chain, a: Fraction, b: Fraction, title: str) -> list[str]:
    """Endpoint sign table: one row per chain member, one-sided at both ends."""
    sa = chain.signs(a, FROM_RIGHT)
    sb = chain.signs(b, FROM_LEFT)
    head_a = f"sign(p_j({format_rational(a)}+))"
    head_b = f"sign(p_j({format_rational(b)}-))"
    w0 = max(len(title), 12)
    wa, wb = len(head_a), len(head_b)
    lines = [f"{title:<{w0}} | {head_a} | {head_b}", "-" * (w0 + wa + wb + 6)]
    for j, (u, v) in enumerate(zip(sa, sb)):
        lines.append(f"{f'p{j}(s)':<{w0}} | {_SIGN[u]:^{wa}} | {_SIGN[v]:^{wb}}")
    lines.append("-" * (w0 + wa + wb + 6))
    lines.append(f"{'sign changes':<{w0}} | {count_variations(sa):^{wa}} | {count_variations(sb):^{wb}}")
    return lines


def _mode_block(v: ModeVerdict) -> list[str]:
    a, b = v.interval
    lines = sign_table(v.chain, a, b, f"n={v.n}")
    lines.append(f"roots in {_fmt_interval(a, b)}: {v.root_count}")
    for e, fp in zip(v.enclosures, v.floquet_pairs):
        m_minus, m_plus = fp.midpoints()
        lines.append(
            f"  s in [{format_rational(e.lo)}, {format_rational(e.hi)}] ~ {float(e.mid):.10g}"
            f"   mu = ({float(m_minus):.10g}, {float(m_plus):.10g})"
        )
    return lines


# subcommands -----------------------------------------------------------------

def cmd_reduce(args) -> int:
    if args.order is None and args.coeffs is None:
        raise UsageError("reduce needs --order N or --coeffs LIST")
    if args.order is not None:
        if args.order < 1 or args.order % 2 == 0:
            raise UsageError(f"--order must be odd and positive, got {args.order}")
        tri = reduction_triangle(args.order)
        print(f"(mu+n)^{args.order} - mu^{args.order}, s = mu*(mu+n); row leaders in parentheses")
        print(tri.format())
        terms = " + ".join(
            f"{a if a != 1 else ''}{'' if i == 0 else ('s' if i == 1 else f's^{i}')}"
            f"{'' if args.order - 2 * i == 0 else ('n' if args.order - 2 * i == 1 else f'n^{args.order - 2 * i}')}"
            for i, a in enumerate(tri.leaders())
        )
        print(f"= {terms}")
    if args.coeffs is not None:
        spec = DispersionSpec.parse(args.coeffs)
        q = build_reduced(spec)
        if args.order is not None:
            print()
        print(f"spec: {spec}   V0 = {format_rational(bifurcation_speed(spec))}")
        print("q(s,n) =")
        print("  " + q.format_grouped().replace("\n", "\n  "))
        print(f"      = {q.format()}")
    return EXIT_STABLE


def cmd_analyze(args) -> int:
    spec = DispersionSpec.parse(args.coeffs)
    report = analyze(spec, args.n_max, args.tol, workers=args.workers)
    if args.json:
        print(report.to_json())
    else:
        print(f"spec: {spec}   V0 = {format_rational(report.v0)}   n_max = {report.n_max}")
        shown = report.verdicts if args.all or report.n_max <= 10 else \
            [v for v in report.verdicts if v.root_count]
        for v in shown:
            print()
            print("\n".join(_mode_block(v)))
        print()
        if report.stable:
            print(f"stable up to n={report.n_max}")
        else:
            print("possibly unstable for n = " + ", ".join(map(str, report.unstable_n)))
    return EXIT_STABLE if report.stable else EXIT_UNSTABLE


def cmd_sturm(args) -> int:
    if args.poly is not None:
        p = UniPoly(parse_rational(t) for t in args.poly.split(","))
        if args.interval is None:
            raise UsageError("--poly needs --interval a:b")
        title = "p"
    else:
        if args.coeffs is None or args.n is None:
            raise UsageError("sturm needs --coeffs LIST --n N, or --poly LIST --interval a:b")
        p = instantiate(build_reduced(DispersionSpec.parse(args.coeffs)), args.n)
        title = f"n={args.n}"
    if args.interval is not None:
        lo, _, hi = args.interval.partition(":")
        a, b = parse_rational(lo), parse_rational(hi)
    else:
        a, b = Fraction(-args.n * args.n, 4), Fraction(0)
    if p.is_zero():
        raise UsageError("zero polynomial has no Sturm chain")
    chain = build_chain(p)
    print(f"g0 = {p.format()}")
    if chain.deflated:
        print("(repeated roots: chain built on the squarefree part)")
    for j, g in enumerate(chain):
        print(f"p{j}(s) = {g.format()}")
    print()
    print("\n".join(sign_table(chain, a, b, title)))
    count = count_roots_open(p, a, b) if a < b else 0
    print(f"distinct roots in {_fmt_interval(a, b)}: {count}")
    for e in isolate_and_refine(p, a, b, args.tol) if count else []:
        print(f"  [{format_rational(e.lo)}, {format_rational(e.hi)}] ~ {float(e.mid):.12g}")
    return EXIT_STABLE


def _grid_from_args(args, require: bool = True) -> Optional[SweepGrid]:
    if args.x is None:
        if require:
            raise UsageError("--x name:lo:hi:count is required")
        return None
    return SweepGrid(
        fixed=SweepGrid.parse_fixed(args.fix or []),
        x=Axis.parse(args.x),
        y=Axis.parse(args.y) if args.y else None,
        n_max=args.n_max,
    )


def cmd_sweep(args) -> int:
    grid = _grid_from_args(args)
    cells = run_sweep(grid, workers=args.workers)
    as_json = args.json or (args.out and args.out.endswith(".json"))
    text = cells_to_json(grid, cells) if as_json else cells_to_csv(cells)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    unstable = sum(1 for c in cells if c.unstable_n)
    print(f"{len(cells)} cells, {unstable} possibly unstable", file=sys.stderr)
    return EXIT_STABLE


def cmd_plot(args) -> int:
    from .plot import render_svg

    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    file_grid, cells = read_sweep(text)
    grid = file_grid or _grid_from_args(args, require=False)
    if args.overlay_boundaries and (grid is None or grid.y is None):
        raise UsageError("--overlay-boundaries needs a 2-D grid (JSON sweep file, or --x/--y/--fix)")
    svg = render_svg(cells, grid, overlay=args.overlay_boundaries, title=args.title or "")
    try:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    return EXIT_STABLE


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sturmstab",
        description="Exact high-frequency stability classification of periodic travelling waves "
                    "of u_t + alpha u_3x + beta u_5x + gamma u_7x + ... + f(u)_x = 0.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_coeffs(p, required=False):
        p.add_argument("--coeffs", required=required, metavar="a,b,c",
                       help="rational coefficients of orders 3,5,7,... e.g. 1,1/4,0")

    p = sub.add_parser("reduce", help="reduction triangle and q(s,n)")
    p.add_argument("--order", type=int, help="odd order N of (mu+n)^N - mu^N")
    add_coeffs(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("analyze", help="Sturm counts on (-n^2/4, 0) for n = 1..n_max")
    add_coeffs(p, required=True)
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--tol", type=_rational, default=DEFAULT_TOL, help="enclosure width (p/q)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--all", action="store_true", help="print every n, not just unstable ones")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sturm", help="Sturm chain and endpoint sign table")
    add_coeffs(p)
    p.add_argument("--n", type=int)
    p.add_argument("--poly", metavar="c0,c1,...", help="ascending coefficients of an arbitrary polynomial")
    p.add_argument("--interval", metavar="a:b")
    p.add_argument("--tol", type=_rational, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_sturm)

    def add_grid(p):
        p.add_argument("--fix", action="append", metavar="name=value")
        p.add_argument("--x", metavar="name:lo:hi:count")
        p.add_argument("--y", metavar="name:lo:hi:count")
        p.add_argument("--n-max", type=int, default=30)

    p = sub.add_parser("sweep", help="parameter-plane sweep to CSV/JSON")
    add_grid(p)
    p.add_argument("--out", metavar="PATH", help="output file (.csv or .json); stdout if omitted")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("plot", help="SVG region plot of a sweep file")
    p.add_argument("input", metavar="SWEEP")
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--overlay-boundaries", action="store_true")
    p.add_argument("--title")
    add_grid(p)
    p.set_defaults(func=cmd_plot)
    return ap


# options whose value may start with "-" (negative rationals such as -9/4:0)
_VALUE_OPTS = {"--interval", "--x", "--y", "--fix", "--coeffs", "--poly"}


def _attach_values(argv: Sequence[str]) -> list[str]:
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_OPTS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(_attach_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_STABLE
    try:
        return args.func(args)
    except (UsageError, SpecError, SweepFileError, ValueError) as exc:
        print(f"sturmstab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
