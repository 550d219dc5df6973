"""Command-line interface: polygon JSON in, centers and sweeps out.

Results go to standard output (or ``--output``) as JSON with 12
significant digits; ``sweep`` emits CSV by default.  Exit status is 0 on
success, 1 on solver failure, and 2 on input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import cone, geometry, optimize, oracle
from .errors import InputError, SolverError

SIGNIFICANT_DIGITS = 12
SWEEP_COLUMNS = (
    "h",
    "center_x",
    "center_y",
    "boundary_area",
    "volume",
    "ratio",
    "equal_angle_residual",
)
_VERIFY_PROBES = ((0.13, 0.07), (-0.21, 0.11), (0.05, -0.17))


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _height_list(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one height")
    if any(not v > 0.0 for v in values):
        raise argparse.ArgumentTypeError("heights must be > 0")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conecenter",
        description="Centers of polygons under the cone boundary-area and "
        "isoperimetric-ratio criteria.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("polygon", help='path to a {"vertices": [[x, y], ...]} JSON file')
        p.add_argument("--output", default=None, help="write the result here instead of stdout")
        return p

    add_command("incenter", "incircle center and radius of a triangle")
    add_command("chebyshev", "deepest point of a convex polygon (max-min edge distance)")
    add_command("centroid", "area centroid")

    p = add_command("center", "apex projection minimizing the cone boundary area")
    p.add_argument("--height", type=_positive_float, required=True, help="cone height")
    p.add_argument("--tol", type=_positive_float, default=1e-10, help="solver tolerance")

    p = add_command("optimal", "apex and height minimizing boundary^3 / volume^2")
    p.add_argument("--tol", type=_positive_float, default=1e-10, help="solver tolerance")

    p = add_command("sweep", "fixed-height centers over a list of heights")
    p.add_argument("--heights", type=_height_list, default=None, help="comma-separated heights")
    p.add_argument("--h-min", type=_positive_float, default=None)
    p.add_argument("--h-max", type=_positive_float, default=None)
    p.add_argument("--h-steps", type=int, default=None)
    p.add_argument("--tol", type=_positive_float, default=1e-10, help="solver tolerance")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add_command("verify", "cross-check the solver against the grid oracle")
    p.add_argument(
        "--heights",
        type=_height_list,
        default=[0.3, 1.0, 3.0],
        help="comma-separated heights (default 0.3,1,3)",
    )
    p.add_argument("--tol", type=_positive_float, default=1e-10, help="solver tolerance")

    return parser


def _round_sig(value: float) -> float:
    return float(f"{float(value):.{SIGNIFICANT_DIGITS}g}")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {key: _jsonable(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(val) for val in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(val) for val in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round_sig(obj)
    return obj


def _emit(text: str, output) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _json_text(payload) -> str:
    return json.dumps(_jsonable(payload), indent=2) + "\n"


def _cmd_incenter(poly, args):
    result = geometry.triangle_incenter(poly)
    return {"center": result.center, "radius": result.radius}


def _cmd_chebyshev(poly, args):
    result = geometry.chebyshev_center(poly)
    return {"center": result.center, "radius": result.radius}


def _cmd_centroid(poly, args):
    return {"centroid": geometry.centroid(poly)}


def _cmd_center(poly, args):
    result = optimize.center_at_height(poly, args.height, tol=args.tol)
    return {
        "center": result.center,
        "height": result.height,
        "boundary_area": result.boundary_area,
        "gradient_norm": result.gradient_norm,
        "distance_profile": result.distance_profile.distances,
        "equal_angle_residual": cone.equal_angle_residual(poly, result.center, result.height),
        "iterations": result.iterations,
        "converged": result.converged,
    }


def _cmd_optimal(poly, args):
    result = optimize.optimal_cone(poly, tol=args.tol)
    payload = {
        "center": result.center,
        "height": result.height,
        "ratio": result.ratio,
        "inner_evaluations": len(result.inner_results),
    }
    if result.height_over_inradius is not None:
        payload["height_over_inradius"] = result.height_over_inradius
    return payload


def _sweep_heights(args) -> list[float]:
    if args.heights is not None:
        return args.heights
    if args.h_min is None or args.h_max is None or args.h_steps is None:
        raise InputError("sweep needs --heights or all of --h-min/--h-max/--h-steps")
    if args.h_steps < 1:
        raise InputError(f"--h-steps must be at least 1, got {args.h_steps}")
    if args.h_max < args.h_min:
        raise InputError("--h-max must not be below --h-min")
    return [float(h) for h in np.linspace(args.h_min, args.h_max, args.h_steps)]


def _sweep_rows(poly, heights, tol):
    rows = []
    for entry in optimize.height_sweep(poly, heights, tol=tol):
        if entry.error is not None:
            raise SolverError(f"sweep failed at h={entry.height:g}: {entry.error}")
        residual = cone.equal_angle_residual(poly, entry.result.center, entry.height)
        rows.append(
            (
                entry.height,
                entry.result.center[0],
                entry.result.center[1],
                entry.result.boundary_area,
                cone.cone_volume(poly, entry.height),
                entry.ratio,
                residual,
            )
        )
    return rows


def _cmd_sweep(poly, args) -> str:
    rows = _sweep_rows(poly, _sweep_heights(args), args.tol)
    if args.format == "json":
        return _json_text([dict(zip(SWEEP_COLUMNS, row)) for row in rows])
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow([f"{value:.{SIGNIFICANT_DIGITS}g}" for value in row])
    return buffer.getvalue()


def _cmd_verify(poly, args):
    spec = oracle.default_grid_spec(poly)
    point_tol = 10.0 * spec.final_resolution()
    fd_step = 1e-6 * poly.diameter
    anchor = geometry.centroid(poly)
    lines = []
    all_ok = True

    def check(ok, label, detail):
        nonlocal all_ok
        all_ok = all_ok and ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {label}: {detail}")

    for h in args.heights:
        solved = optimize.center_at_height(poly, h, tol=args.tol)
        point, value = oracle.grid_min_boundary(poly, h, spec)
        rel = abs(value - solved.boundary_area) / solved.boundary_area
        check(
            solved.converged and rel <= 1e-6,
            f"minimum value h={h:g}",
            f"solver={solved.boundary_area:.12g} oracle={value:.12g} rel_diff={rel:.3e}",
        )
        distance = float(np.linalg.norm(point - solved.center))
        check(
            distance <= point_tol,
            f"minimum point h={h:g}",
            f"|oracle - solver| = {distance:.3e} (allowed {point_tol:.3e})",
        )
        worst = 0.0
        for offset in _VERIFY_PROBES:
            probe = anchor + poly.diameter * np.asarray(offset)
            analytic = optimize.boundary_gradient(poly, probe, h)
            numeric = oracle.finite_diff_gradient(
                lambda p: cone.boundary_area(poly, cone.Apex(projection=p, height=h)),
                probe,
                fd_step,
            )
            scale = max(float(np.linalg.norm(analytic)), 1e-9 * poly.perimeter)
            worst = max(worst, float(np.linalg.norm(numeric - analytic)) / scale)
        check(
            worst <= 1e-6,
            f"gradient h={h:g}",
            f"max relative finite-difference mismatch {worst:.3e}",
        )

    lines.append("all checks passed" if all_ok else "some checks FAILED")
    return "\n".join(lines) + "\n", 0 if all_ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        poly = geometry.load_polygon(args.polygon)
        if args.command == "incenter":
            text = _json_text(_cmd_incenter(poly, args))
        elif args.command == "chebyshev":
            text = _json_text(_cmd_chebyshev(poly, args))
        elif args.command == "centroid":
            text = _json_text(_cmd_centroid(poly, args))
        elif args.command == "center":
            text = _json_text(_cmd_center(poly, args))
        elif args.command == "optimal":
            text = _json_text(_cmd_optimal(poly, args))
        elif args.command == "sweep":
            text = _cmd_sweep(poly, args)
        else:
            text, status = _cmd_verify(poly, args)
            _emit(text, args.output)
            return status
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(text, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
