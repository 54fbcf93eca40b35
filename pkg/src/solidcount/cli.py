"""Command-line front end.

Subcommands
-----------
dedekind   exact Dedekind(-Rademacher) sums
triangle   solid-angle sum A or lattice count L of the axis triangle
polygon    the same for a polygon read from a file
oracle     brute-force A or L for a polygon file (ground truth)
sweep      CSV of (t, A, L) over an inclusive rational grid
spectral   CSV convergence table for the damped frequency sums
verify     run the built-in verification suites

Exact values print as rationals or the ``r +/- c*atan2(b,a)/2pi`` angle
rendering; ``--float`` switches to 12-significant-digit decimals.  Exit
codes: 0 success, 1 failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .angles import AngleValue
from .oracle import brute_force_A, brute_force_L
from .polygon import ehrhart_polygon, load_polygon, solid_angle_sum_polygon
from .rational import parse_rational
from .spectral import (
    DEFAULT_EPSILONS,
    DEFAULT_TWIST_CASES,
    SpectralConfig,
    convergence_report,
    twisted_transform_check,
)
from .triangle import SimplePointedTriangle, ehrhart_triangle, solid_angle_sum_triangle
from .verify import run_suite

__all__ = ["main"]


def _fmt_float(x: float) -> str:
    return format(x, ".12g")


def _print_angle(value: AngleValue, as_float: bool) -> None:
    if as_float:
        print(_fmt_float(value.to_float()))
    else:
        print(value.render())
        print(_fmt_float(value.to_float()))


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solidcount",
        description="Exact solid-angle sums and lattice counts of rational polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ded = sub.add_parser("dedekind", help="Dedekind(-Rademacher) sums")
    p_ded.add_argument("--h", type=int, required=True)
    p_ded.add_argument("--k", type=int, required=True)
    p_ded.add_argument("--y", type=_rational, default=Fraction(0),
                       help="additive shift inside the first sawtooth factor")
    p_ded.add_argument("--x", type=_rational, default=Fraction(0),
                       help="residue shift")
    p_ded.add_argument("--star", action="store_true",
                       help="use the everywhere-sawtooth variant")
    p_ded.add_argument("--fast", action="store_true",
                       help="reciprocity fast path (classical sum only)")

    for name, help_text in (("triangle", "axis right triangle with legs h, k"),
                            ("polygon", "polygon from a vertex file"),
                            ("oracle", "brute-force ground truth for a polygon file")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("quantity", choices=["A", "L"],
                       help="A: solid-angle sum; L: lattice-point count")
        if name == "triangle":
            p.add_argument("--h", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
        else:
            p.add_argument("--file", required=True)
        p.add_argument("--t", type=_rational, required=True)
        p.add_argument("--float", action="store_true", dest="as_float",
                       help="print a single decimal with 12 significant digits")

    p_sweep = sub.add_parser("sweep", help="CSV of t, A, L over a rational grid")
    p_sweep.add_argument("--h", type=int, required=True)
    p_sweep.add_argument("--k", type=int, required=True)
    p_sweep.add_argument("--t-min", type=_rational, required=True)
    p_sweep.add_argument("--t-max", type=_rational, required=True)
    p_sweep.add_argument("--steps", type=int, required=True,
                         help="number of equal steps (emits steps+1 rows)")
    p_sweep.add_argument("--out", required=True, help="output CSV path")

    p_spec = sub.add_parser("spectral", help="convergence CSV for the damped sums")
    p_spec.add_argument("--target", required=True,
                        choices=["a1", "b1", "b2", "b3", "c3-sum", "twisted-transform"])
    p_spec.add_argument("--h", type=int, required=True)
    p_spec.add_argument("--k", type=int, required=True)
    p_spec.add_argument("--t", type=_rational, required=True)
    p_spec.add_argument("--eps-list", type=float, nargs="+",
                        default=list(DEFAULT_EPSILONS))
    p_spec.add_argument("--c", type=float, default=6.0,
                        help="truncation radius factor: R = ceil(c/sqrt(eps))")

    p_ver = sub.add_parser("verify", help="run verification suites")
    p_ver.add_argument("--suite", default="all",
                       choices=["reciprocity", "pick", "oracle", "knuth", "spectral", "all"])

    return parser


def _cmd_dedekind(args) -> int:
    from .bernoulli import (
        dedekind_rademacher,
        dedekind_rademacher_star,
        dedekind_sum_fast,
    )

    if args.fast:
        if args.star or args.y != 0 or args.x != 0:
            print("--fast applies only to the classical sum (no shifts, no --star)",
                  file=sys.stderr)
            return 2
        print(dedekind_sum_fast(args.h, args.k))
        return 0
    fn = dedekind_rademacher_star if args.star else dedekind_rademacher
    print(fn(args.h, args.k, args.y, args.x))
    return 0


def _cmd_triangle(args) -> int:
    tri = SimplePointedTriangle(args.h, args.k)
    if args.quantity == "A":
        _print_angle(solid_angle_sum_triangle(tri, args.t), args.as_float)
    else:
        print(ehrhart_triangle(tri, args.t))
    return 0


def _cmd_polygon(args) -> int:
    poly = load_polygon(args.file)
    if args.quantity == "A":
        _print_angle(solid_angle_sum_polygon(poly, args.t), args.as_float)
    else:
        print(ehrhart_polygon(poly, args.t))
    return 0


def _cmd_oracle(args) -> int:
    poly = load_polygon(args.file)
    if args.quantity == "A":
        _print_angle(brute_force_A(poly, args.t), args.as_float)
    else:
        print(brute_force_L(poly, args.t))
    return 0


def _cmd_sweep(args) -> int:
    if args.steps < 1:
        print("--steps must be at least 1", file=sys.stderr)
        return 2
    if args.t_min <= 0 or args.t_max <= args.t_min:
        print("need 0 < t-min < t-max", file=sys.stderr)
        return 2
    tri = SimplePointedTriangle(args.h, args.k)
    step = Fraction(args.t_max - args.t_min, args.steps)
    lines = ["t,A_float,L_int"]
    for i in range(args.steps + 1):
        t = args.t_min + i * step
        a = solid_angle_sum_triangle(tri, t).to_float()
        lines.append(f"{t},{_fmt_float(a)},{ehrhart_triangle(tri, t)}")
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {args.steps + 1} rows to {args.out}")
    return 0


def _cmd_spectral(args) -> int:
    print("epsilon,value,abs_error")
    if args.target == "twisted-transform":
        # no epsilon limit here: one row per check case, the first column
        # carrying the case index
        for idx, (matrix, xi, shift) in enumerate(DEFAULT_TWIST_CASES):
            closed, quad = twisted_transform_check(matrix, xi, shift)
            print(f"{idx},{_fmt_float(abs(closed))},{_fmt_float(abs(closed - quad))}")
        return 0
    cfg = SpectralConfig(epsilons=tuple(args.eps_list), radius_factor=args.c,
                         target=args.target)
    tri = SimplePointedTriangle(args.h, args.k)
    for row in convergence_report(tri, args.t, cfg):
        print(f"{_fmt_float(row.epsilon)},{_fmt_float(row.value)},{_fmt_float(row.abs_error)}")
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failures = 0
    for name, passed, detail in results:
        status = "PASS" if passed else "FAIL"
        print(f"{status} {name}: {detail}")
        failures += not passed
    print(f"{len(results) - failures}/{len(results)} suites passed")
    return 0 if failures == 0 else 1


_HANDLERS = {
    "dedekind": _cmd_dedekind,
    "triangle": _cmd_triangle,
    "polygon": _cmd_polygon,
    "oracle": _cmd_oracle,
    "sweep": _cmd_sweep,
    "spectral": _cmd_spectral,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
