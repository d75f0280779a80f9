"""Command-line front end: ``bryophylla info|render|scan|limit|farey-coord|verify``.

Exit codes: 0 ok, 1 usage, 2 excluded or non-Farey parameters, 3 I/O,
4 no convergence, 5 verification failure.
"""

from __future__ import annotations

import argparse
import ast
import csv
import json
import math
import operator
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional, Sequence

from .canonical import (
    REGION_EPS,
    RegionLabel,
    arc_center_x,
    arc_radius_R,
    classify_region,
    farey_inequalities,
    make_canonical,
    radius_r,
)
from .dynamics import limit_point
from .exceptions import ExcludedLocus, InvalidParameters, NoConvergence, NotFarey, OutOfRange
from .farey import (
    binary_expansion,
    cf_float,
    eta_cf,
    cf_eval,
    lr_decomposition,
    rational_str,
)
from .svg import RenderSpec, render_svg
from .verify import run_suite
from .words import EventuallyPeriodicWord, as_word

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO, EXIT_NOCONV, EXIT_VERIFY = range(6)


class UsageError(Exception):
    pass


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_UNOPS = {ast.UAdd: operator.pos, ast.USub: operator.neg}
_NAMES = {"pi": math.pi, "tau": math.tau}


def _eval_node(node: ast.AST) -> float:
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return float(node.value)
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_node(node.left), _eval_node(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
        return _UNOPS[type(node.op)](_eval_node(node.operand))
    raise ValueError("unsupported expression")


def parse_angle(text: str, degrees: bool = False) -> float:
    """Parse ``"1.2"``, ``"pi/2"``, ``"2*pi/3"`` and the like."""
    try:
        value = _eval_node(ast.parse(text.strip().replace("π", "pi"), mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError, OverflowError) as exc:
        raise UsageError(f"cannot parse angle {text!r}") from exc
    if not math.isfinite(value):
        raise UsageError(f"angle {text!r} is not finite")
    return math.radians(value) if degrees else value


def angle_resolution(text: str, degrees: bool = False) -> float:
    """Half a unit in the last decimal place of every literal in an angle expression.

    ``"2.0943951"`` can only mean 2pi/3 up to 5e-8, so classifying it with a
    1e-9 band would miss the boundary it was meant to name.
    """
    src = text.strip().replace("π", "pi")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise UsageError(f"cannot parse angle {text!r}") from exc
    res = 0.0
    for node in ast.walk(tree):
        if isinstance(node, ast.Constant) and isinstance(node.value, float):
            try:
                exp = Decimal(ast.get_source_segment(src, node)).as_tuple().exponent
            except (InvalidOperation, TypeError):
                continue
            res += 0.5 * 10.0 ** exp
    return math.radians(res) if degrees else res


_EXCLUDED = {RegionLabel.DegeneratePhi, RegionLabel.Rone_AB_CD, RegionLabel.RminusOne_BD}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _angles(args) -> tuple[float, float]:
    return parse_angle(args.phi, args.degrees), parse_angle(args.psi, args.degrees)


def _finite_or_none(x: float) -> Optional[float]:
    return x if math.isfinite(x) else None


def _cx(z: complex) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r} {sign} {abs(z.imag)!r}i"


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_info(args) -> int:
    phi, psi = _angles(args)
    eps = args.eps
    if eps is None:
        res = angle_resolution(args.phi, args.degrees) + angle_resolution(args.psi, args.degrees)
        eps = max(REGION_EPS, 3 * res)
    region = classify_region(phi, psi, eps)
    if region in _EXCLUDED:
        raise ExcludedLocus(f"(phi, psi)=({phi!r}, {psi!r}) lies on the excluded locus {region}")
    b = make_canonical(phi, psi)
    data = b.to_dict()
    data["region"] = region.value
    data["region_eps"] = eps
    if b.is_affine:
        data["arc_center_x"] = None
        data["arc_radius_R"] = None
    else:
        data["arc_center_x"] = arc_center_x(phi, psi)
        data["arc_radius_R"] = arc_radius_R(phi, psi)
    g1, g2, g3 = farey_inequalities(phi, psi)
    data["g"] = [g1, g2, g3]
    x = data["arc_center_x"]
    lines = [
        f"phi          {phi!r}",
        f"psi          {psi!r}",
        f"r            {b.r!r}",
        f"q            {_cx(b.q)}",
        f"arc_center_x {'inf' if x is None else repr(x)}",
        f"arc_radius_R {'inf' if x is None else repr(data['arc_radius_R'])}",
        f"g1 g2 g3     {g1!r} {g2!r} {g3!r}",
        f"is_affine    {str(b.is_affine).lower()}",
        f"is_farey     {str(data['is_farey']).lower()}",
        f"region       {data['region']}",
    ]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_render(args) -> int:
    phi, psi = _angles(args)
    try:
        spec = RenderSpec(phi, psi, depth=args.depth, width_px=args.width,
                          stroke=args.stroke, fill=args.fill)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    svg = render_svg(make_canonical(phi, psi), spec)
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    return EXIT_OK


def _grid(n: int) -> list[float]:
    return [math.pi * k / (n + 1) for k in range(1, n + 1)]


def cmd_scan(args) -> int:
    if args.grid_phi < 2 or args.grid_psi < 2:
        raise UsageError("grid sizes must be at least 2")
    rows = []
    for phi in _grid(args.grid_phi):
        for psi in _grid(args.grid_psi):
            g1, g2, g3 = farey_inequalities(phi, psi)
            rows.append([repr(phi), repr(psi), repr(radius_r(phi, psi)),
                         repr(g1), repr(g2), repr(g3), classify_region(phi, psi).value])
    out = sys.stdout if args.out in (None, "-") else open(args.out, "w", encoding="utf-8", newline="")
    try:
        writer = csv.writer(out, lineterminator="\r\n")
        writer.writerow(["phi", "psi", "r", "g1", "g2", "g3", "region"])
        writer.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_limit(args) -> int:
    phi, psi = _angles(args)
    try:
        word = as_word(args.word or "")
        period = as_word(args.period or "")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not word and not period:
        raise UsageError("give a nonempty --word or --period")
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    b = make_canonical(phi, psi)
    target = EventuallyPeriodicWord(word, period) if period else word
    point, bound = limit_point(b, target, tol=args.tol, max_depth=args.max_depth,
                               exact=not args.iterate)
    data = {"re": point.real, "im": point.imag, "bound": bound,
            "word": "".join(map(str, word)), "period": "".join(map(str, period))}
    _emit(args, data, [f"point  {_cx(point)}", f"bound  {bound!r}"])
    return EXIT_OK


def cmd_farey_coord(args) -> int:
    try:
        alpha = Fraction(args.alpha.strip())
        expansion = binary_expansion(alpha)
    except (ValueError, ZeroDivisionError, OutOfRange) as exc:
        raise UsageError(f"bad --alpha {args.alpha!r}: {exc}") from exc
    runs = lr_decomposition(expansion)
    cf = eta_cf(alpha)
    data = {"alpha": rational_str(alpha), "binary": str(expansion), "runs": str(runs), "cf": str(cf)}
    if cf.is_periodic:
        data["eta"] = None
        data["eta_float"] = cf_float(cf)
        eta_line = f"eta     {cf} ~ {data['eta_float']!r}"
    else:
        value = cf_eval(cf)
        data["eta"] = rational_str(value)
        data["eta_float"] = float(value)
        eta_line = f"eta     {data['eta']}"
    lines = [f"alpha   {data['alpha']}", f"binary  {data['binary']}",
             f"runs    {data['runs']}", f"cf      {data['cf']}", eta_line]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    phi, psi = _angles(args)
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    results = run_suite(phi, psi, samples=args.samples, tol=args.tol, seed=args.seed)
    ok = all(r.passed for r in results)
    if args.json:
        payload = {"passed": ok, "checks": [
            {"name": r.name, "residual": _finite_or_none(r.residual), "tol": r.tol,
             "skipped": r.skipped, "passed": r.passed} for r in results]}
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if ok else EXIT_VERIFY


def _add_angles(p: argparse.ArgumentParser) -> None:
    p.add_argument("--phi", required=True, help="angle phi, e.g. 1.57 or pi/2")
    p.add_argument("--psi", required=True, help="angle psi, e.g. pi/5")
    p.add_argument("--degrees", action="store_true", help="read angles in degrees")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bryophylla", description="Canonical conformal bryophylla.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="derived quantities and region of Br(phi, psi)")
    _add_angles(p)
    p.add_argument("--eps", type=float, default=None,
                   help="region tolerance (default: 1e-9, widened to the precision of the input)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("render", help="SVG of all nested triangles up to a depth")
    _add_angles(p)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--width", type=int, default=800, help="width in pixels")
    p.add_argument("--stroke", default="#1f3a5f")
    p.add_argument("--fill", default="none")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("scan", help="CSV of region labels over a (phi, psi) grid")
    p.add_argument("--grid-phi", type=int, default=50)
    p.add_argument("--grid-psi", type=int, default=50)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("limit", help="limit point of an infinite binary word")
    _add_angles(p)
    p.add_argument("--word", default="", help="finite word, or preperiod when --period is given")
    p.add_argument("--period", default="", help="repeating block")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-depth", type=int, default=64)
    p.add_argument("--iterate", action="store_true",
                   help="iterate triangles even for periodic words")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("farey-coord", help="binary, LR and continued-fraction data of eta(alpha)")
    p.add_argument("--alpha", required=True, help="rational in [0, 1], e.g. 1/4")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_farey_coord)

    p = sub.add_parser("verify", help="run the numerical invariant suite")
    _add_angles(p)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--tol", type=float, default=None, help="override every tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, parse errors exit EXIT_USAGE
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bryophylla: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ExcludedLocus, InvalidParameters, NotFarey) as exc:
        print(f"bryophylla: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NoConvergence as exc:
        print(f"bryophylla: no convergence: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except OSError as exc:
        print(f"bryophylla: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
