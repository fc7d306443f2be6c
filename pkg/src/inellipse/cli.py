"""Command-line front end.

    inellipse classify --vertices "0,0 0,1 2,4 6.8,-2.4"
    inellipse besant   --vertices "0,0 0,1 2,2 2,-1" --svg trap.svg
    inellipse inscribe --vertices "0,0 0,1 2,4 34/5,-12/5" --r 0.5
    inellipse maxarea  --input-file quads.txt

Reports are JSON with a fixed key order and 12 significant digits.
Exit codes: 0 ok, 2 non-convex input or r out of range, 3 unparseable
input, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import config
from .besant import besant_ellipse, classify_besant, pair_distance
from .conic import Conic, center, foci, line_tangency
from .errors import InellipseError, NotConvex, ParamOutOfRange
from .inscribed import area_at, check_param, conic_at, max_area_param
from .marden import family_foci_quadratic, marden_foci, t_weights, triangle_vertices
from .quad import (
    CanonicalQuad,
    ConvexQuad,
    Point,
    canonicalize,
    is_cyclic,
    is_orthodiagonal,
    is_parallelogram,
    is_trapezoid,
    midpoint_circumcenter,
)
from .svg import render

EXIT_OK, EXIT_NOT_CONVEX, EXIT_PARSE, EXIT_IO = 0, 2, 3, 4


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class QuadInput:
    vertices: tuple[Point, Point, Point, Point]
    label: str | None = None


def _number(text: str) -> float:
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a number: {text!r}") from exc


def parse_vertices(text: str, label: str | None = None) -> QuadInput:
    """``"x,y x,y x,y x,y"``; numbers may be decimals or fractions like ``34/5``."""
    pairs = text.split()
    if len(pairs) != 4:
        raise ParseError(f"expected 4 vertices, got {len(pairs)}")
    pts = []
    for pair in pairs:
        parts = pair.split(",")
        if len(parts) != 2:
            raise ParseError(f"vertex {pair!r} is not of the form x,y")
        pts.append(Point(_number(parts[0]), _number(parts[1])))
    return QuadInput(tuple(pts), label)


def parse_line(line: str) -> QuadInput | None:
    """A batch line: optional label (``name:`` or a leading comma-free token), then four vertices.

    Blank lines and ``#`` comments are skipped.
    """
    text = line.split("#", 1)[0].strip()
    if not text:
        return None
    label = None
    if ":" in text:
        label, text = (part.strip() for part in text.split(":", 1))
    else:
        tokens = text.split()
        if len(tokens) == 5 and "," not in tokens[0]:
            label, text = tokens[0], " ".join(tokens[1:])
    return parse_vertices(text, label or None)


def _num(x: float | None) -> float | None:
    if x is None:
        return None
    if not math.isfinite(x):
        return x
    return float(f"{x:.12g}") + 0.0


def _pt(p: Point | complex | None) -> list[float] | None:
    if p is None:
        return None
    p = Point.coerce(p)
    return [_num(p.x), _num(p.y)]


def _conic(c: Conic | None) -> dict[str, float] | None:
    if c is None:
        return None
    n = c.normalized()
    return {name: _num(v) for name, v in zip("ABCDEF", n.coefficients)}


def _check(name: str, passed: bool, residual: float) -> dict[str, Any]:
    return {"name": name, "passed": bool(passed), "residual": _num(residual)}


def _header(command: str, quad: QuadInput, cq: CanonicalQuad) -> dict[str, Any]:
    return {
        "command": command,
        "label": quad.label,
        "input": [_pt(p) for p in quad.vertices],
        "canonical": {k: _num(getattr(cq, k)) for k in "stvw"},
    }


def _prepare(quad: QuadInput, tol: float) -> tuple[ConvexQuad, CanonicalQuad]:
    q = ConvexQuad(quad.vertices, tol).clockwise()
    return q, canonicalize(q, tol)


def _tangency_residual(conic: Conic, q: ConvexQuad, tol: float) -> tuple[bool, float]:
    # callers pass the canonical pose: far-off small quads make original-pose coefficients ill-conditioned
    worst, ok = 0.0, True
    for a, b in q.sides():
        hit = line_tangency(conic, a, b, tol)
        worst = max(worst, hit.residual)
        ok = ok and hit.kind.value == "tangent" and hit.interior
    return ok, worst


def classify_report(quad: QuadInput, tol: float, command: str = "classify") -> dict[str, Any]:
    q, cq = _prepare(quad, tol)
    result = classify_besant(q, tol)
    d = cq.derived
    cyc_scale = max(1.0, abs(d.beta * cq.v), abs(cq.s * (cq.v**2 + cq.w**2)), abs(d.N))
    ortho_res = abs(cq.w - (1 - cq.s * cq.v / cq.t))
    try:
        r_star, _ = max_area_param(cq)
    except InellipseError:
        r_star = None
    report = _header(command, quad, cq)
    report.update(
        flags={
            "cyclic": is_cyclic(cq, tol),
            "orthodiagonal": is_orthodiagonal(cq, tol),
            "trapezoid": is_trapezoid(cq, tol),
            "parallelogram": is_parallelogram(cq, tol),
            "besant": result.is_besant,
        },
        reason=result.reason.value,
        EP=_pt(result.EP),
        IP=_pt(result.IP),
        center=_pt(result.center),
        conic=_conic(result.ellipse),
        r=_num(result.r_canonical),
        r_max_area=_num(r_star),
        checks=[
            _check("cyclic", is_cyclic(cq, tol), abs(d.CYC) / cyc_scale),
            _check("orthodiagonal", is_orthodiagonal(cq, tol), ortho_res),
        ],
    )
    return report


def besant_report(quad: QuadInput, tol: float, svg: str | None = None) -> dict[str, Any]:
    report = classify_report(quad, tol, command="besant")
    q, cq = _prepare(quad, tol)
    result = classify_besant(q, tol)
    checks = report["checks"]
    circle = None
    if result.EP is not None:
        circle = (result.EP, result.EP.distance(q.vertices[0]))
    if result.is_besant:
        conic = result.ellipse
        f = foci(conic, tol)
        res = pair_distance(f, (result.EP, result.IP))
        near = 1e-6 * q.diameter
        checks.append(_check("foci_are_EP_IP", res <= near, res / q.diameter))
        ok, worst = _tangency_residual(besant_ellipse(cq, tol)[0], cq.as_quad(), tol)
        checks.append(_check("tangent_to_all_sides", ok, worst))
        c0 = cq.to_original.apply(midpoint_circumcenter(cq, tol))
        res = c0.distance(result.center)
        checks.append(_check("center_is_midpoint_circumcenter", res <= near, res / q.diameter))
    if svg is not None:
        markers = {"IP": result.IP}
        if result.EP is not None:
            markers = {"EP": result.EP, "IP": result.IP}
        if result.center is not None:
            markers["center"] = result.center
        text = render(q.vertices, result.ellipse, circle, markers, title=quad.label)
        with open(svg, "w", encoding="utf-8") as fh:
            fh.write(text)
        report["svg"] = svg
    return report


def inscribe_report(quad: QuadInput, tol: float, r: float) -> dict[str, Any]:
    r = check_param(r)
    q, cq = _prepare(quad, tol)
    to = cq.to_original
    canonical_conic = conic_at(cq, r, tol)
    conic = canonical_conic.transformed(to)
    by_coeffs = foci(conic, tol)
    if is_trapezoid(cq, tol):
        route = "foci_quadratic"
        roots = family_foci_quadratic(cq, r).roots()
    else:
        route = "marden_triangle"
        roots = marden_foci(*triangle_vertices(cq), t_weights(cq, r)).foci
    by_marden = tuple(to.apply(Point.from_complex(z)) for z in roots)
    by_marden = tuple(sorted(by_marden, key=lambda p: (p.x, p.y)))
    residual = pair_distance(by_coeffs, by_marden)
    ok, worst = _tangency_residual(canonical_conic, cq.as_quad(), tol)
    report = _header("inscribe", quad, cq)
    report.update(
        r=_num(r),
        conic=_conic(conic),
        center=_pt(to.apply(center(canonical_conic))),
        foci_coefficients=[_pt(p) for p in by_coeffs],
        foci_marden=[_pt(p) for p in by_marden],
        marden_route=route,
        cross_route_residual=_num(residual),
        checks=[
            _check("foci_routes_agree", residual <= 1e-8 * q.diameter, residual / q.diameter),
            _check("tangent_to_all_sides", ok, worst),
        ],
    )
    return report


def maxarea_report(quad: QuadInput, tol: float) -> dict[str, Any]:
    q, cq = _prepare(quad, tol)
    r_star, area = max_area_param(cq)
    scale2 = cq.to_original.scale ** 2
    neighbours = [x for x in (r_star - 0.01, r_star + 0.01) if 0 < x < 1]
    local = all(area >= area_at(cq, x) for x in neighbours)
    report = _header("maxarea", quad, cq)
    report.update(
        r_max_area=_num(r_star),
        area=_num(area * scale2),
        conic=_conic(conic_at(cq, r_star, tol).transformed(cq.to_original)),
        checks=[_check("local_maximum", local, 0.0)],
    )
    return report


def _run_one(args: tuple[str, QuadInput, float, float | None, str | None]) -> tuple[int, dict[str, Any]]:
    command, quad, tol, r, svg = args
    try:
        if command == "classify":
            return EXIT_OK, classify_report(quad, tol)
        if command == "besant":
            return EXIT_OK, besant_report(quad, tol, svg)
        if command == "inscribe":
            return EXIT_OK, inscribe_report(quad, tol, r)
        return EXIT_OK, maxarea_report(quad, tol)
    except (NotConvex, ParamOutOfRange) as exc:
        return EXIT_NOT_CONVEX, {"error": type(exc).__name__, "message": str(exc), "label": quad.label}
    except OSError as exc:
        return EXIT_IO, {"error": "IOError", "message": str(exc), "label": quad.label}


def _text(report: dict[str, Any], prefix: str = "") -> list[str]:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.extend(_text(value, f"{prefix}{key}."))
        elif key == "checks":
            for c in value:
                status = "pass" if c["passed"] else "FAIL"
                lines.append(f"{prefix}check.{c['name']}: {status} (residual {c['residual']})")
        else:
            lines.append(f"{prefix}{key}: {json.dumps(value)}")
    return lines


def format_report(report: dict[str, Any], as_json: bool = True, indent: int | None = 2) -> str:
    if as_json:
        return json.dumps(report, indent=indent, ensure_ascii=False)
    return "\n".join(_text(report))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inellipse",
        description="Inscribed ellipses of convex quadrilaterals and Besant quadrilaterals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--vertices", help='four vertices, e.g. "0,0 0,1 2,4 6.8,-2.4"')
    src.add_argument("--input-file", help="batch input, one quadrilateral per line")
    common.add_argument("--tolerance", type=float, default=None,
                        help=f"relative tolerance (default ${config.TOLERANCE_ENV_VAR} or "
                             f"{config.DEFAULT_TOLERANCE})")
    common.add_argument("--json", action=argparse.BooleanOptionalAction, default=True,
                        help="emit JSON (default) or plain key: value lines")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for --input-file")

    sub.add_parser("classify", parents=[common], help="cyclic / orthodiagonal / Besant flags")
    p = sub.add_parser("besant", parents=[common], help="construct the Besant ellipse")
    p.add_argument("--svg", help="write a figure to this path (single quadrilateral only)")
    p = sub.add_parser("inscribe", parents=[common], help="family member r, foci by two routes")
    p.add_argument("--r", type=float, required=True, help="family parameter in (0, 1)")
    sub.add_parser("maxarea", parents=[common], help="the inscribed ellipse of maximal area")
    return parser


def main(argv: Sequence[str] | None = None, out: Callable[[str], None] | None = None) -> int:
    args = build_parser().parse_args(argv)
    emit = out or (lambda s: print(s))
    tol = args.tolerance if args.tolerance is not None else config.default_tolerance()
    r = getattr(args, "r", None)
    svg = getattr(args, "svg", None)

    if args.vertices is not None:
        try:
            quad = parse_vertices(args.vertices)
        except ParseError as exc:
            print(f"inellipse: parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        code, report = _run_one((args.command, quad, tol, r, svg))
        if code != EXIT_OK:
            print(f"inellipse: {report['error']}: {report['message']}", file=sys.stderr)
            return code
        emit(format_report(report, args.json))
        return EXIT_OK

    try:
        with open(args.input_file, encoding="utf-8") as fh:
            raw = fh.read().splitlines()
    except OSError as exc:
        print(f"inellipse: cannot read {args.input_file}: {exc}", file=sys.stderr)
        return EXIT_IO
    jobs, status = [], EXIT_OK
    parsed: list[tuple[int, QuadInput | dict[str, Any]]] = []
    for lineno, line in enumerate(raw, 1):
        try:
            quad = parse_line(line)
        except ParseError as exc:
            parsed.append((lineno, {"error": "ParseError", "message": str(exc), "line": lineno}))
            status = status or EXIT_PARSE
            continue
        if quad is not None:
            parsed.append((lineno, quad))
            jobs.append((args.command, quad, tol, r, None))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = iter(list(pool.map(_run_one, jobs)))
    else:
        results = iter([_run_one(job) for job in jobs])
    for lineno, item in parsed:
        if isinstance(item, dict):
            report = item
        else:
            code, report = next(results)
            if code != EXIT_OK:
                report["line"] = lineno
                status = status or code
        emit(format_report(report, args.json, indent=None))
    return status


if __name__ == "__main__":
    sys.exit(main())
