"""Solvers for the two cone-center problems.

``center_at_height`` minimizes the cone boundary area over the apex
projection at a fixed height.  The objective

    g(x) = sum_i a_i * sqrt((n_i @ x + c_i)**2 + h**2) / 2

is smooth and convex for h > 0, with analytic gradient
``sum_i a_i * d_i / sqrt(d_i**2 + h**2) * n_i / 2`` and positive
semidefinite Hessian ``sum_i a_i * h**2 / (d_i**2 + h**2)**1.5 *
n_i n_i^T / 2``, so a damped Newton iteration with Armijo backtracking
converges quickly from the centroid.

``optimal_cone`` minimizes ``boundary**3 / volume**2`` over the height by
golden-section search on a bracket grown geometrically around a reference
height; ``height_sweep`` runs independent fixed-height solves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .cone import Apex, isoperimetric_ratio
from .errors import BracketingFailed, InputError, NonpositiveHeight, SolverError
from .geometry import (
    DistanceProfile,
    Polygon,
    centroid,
    chebyshev_center,
    signed_distances,
    triangle_incenter,
)

__all__ = [
    "CenterResult",
    "OptimalCone",
    "SweepEntry",
    "boundary_gradient",
    "center_at_height",
    "optimal_cone",
    "height_sweep",
]

ARMIJO_SLOPE = 1e-4
BACKTRACK_FACTOR = 0.5
MAX_CONDITION = 1e12
_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_BRACKET_FACTOR = 64.0
_MAX_EXPANSIONS = 8
_POLISH_STEPS = 4


@dataclass(frozen=True, eq=False)
class CenterResult:
    """Outcome of one fixed-height minimization."""

    center: np.ndarray
    height: float
    boundary_area: float
    gradient_norm: float
    distance_profile: DistanceProfile
    iterations: int
    converged: bool


@dataclass(frozen=True, eq=False)
class OptimalCone:
    """Outcome of the nested height optimization.

    ``height_over_inradius`` is filled for triangle bases only;
    ``inner_results`` records every fixed-height solve in evaluation order.
    """

    center: np.ndarray
    height: float
    ratio: float
    height_over_inradius: Optional[float]
    inner_results: tuple[CenterResult, ...]


@dataclass(frozen=True, eq=False)
class SweepEntry:
    """One height of a sweep; ``error`` is set instead of aborting the sweep."""

    height: float
    result: Optional[CenterResult]
    ratio: Optional[float]
    error: Optional[str]


def boundary_gradient(poly: Polygon, point, height) -> np.ndarray:
    """Analytic gradient of the boundary area with respect to the projection."""
    h = float(height)
    if not h > 0.0:
        raise NonpositiveHeight(f"height must be > 0, got {height}")
    d = poly.normals @ np.asarray(point, dtype=float) + poly.offsets
    return poly.normals.T @ (0.5 * poly.lengths * d / np.hypot(d, h))


def _search_direction(normals, lengths, h, slant, grad):
    """Newton direction when the 2x2 Hessian is safely invertible, else the
    negative gradient.  Returns ``(direction, used_newton)``."""
    w = 0.5 * lengths * (h * h) / slant**3
    hxx = float(w @ (normals[:, 0] * normals[:, 0]))
    hyy = float(w @ (normals[:, 1] * normals[:, 1]))
    hxy = float(w @ (normals[:, 0] * normals[:, 1]))
    mean = 0.5 * (hxx + hyy)
    disc = math.hypot(0.5 * (hxx - hyy), hxy)
    lam_min, lam_max = mean - disc, mean + disc
    if not (math.isfinite(lam_max) and lam_max > 0.0) or lam_min <= lam_max / MAX_CONDITION:
        return -grad, False
    det = hxx * hyy - hxy * hxy
    direction = np.array(
        [
            -(hyy * grad[0] - hxy * grad[1]) / det,
            -(hxx * grad[1] - hxy * grad[0]) / det,
        ]
    )
    return direction, True


def center_at_height(poly: Polygon, height, tol=1e-10, x0=None, max_iter=200) -> CenterResult:
    """Minimize the cone boundary area over the apex projection at fixed height.

    Parameters
    ----------
    poly : Polygon
    height : positive float
    tol : positive float
        Convergence when the gradient norm drops to ``tol * perimeter / 2``.
    x0 : array_like, optional
        Starting point; defaults to the centroid.
    max_iter : int
        Iteration cap; on hitting it the best iterate is returned with
        ``converged=False`` rather than raising.

    Notes
    -----
    After the gradient test fires, a few extra full Newton steps are taken
    while they keep shrinking the gradient: on thin polygons the low-
    curvature axis otherwise retains a displacement far above the rounding
    floor even though the gradient is already below tolerance.
    """
    h = float(height)
    if not h > 0.0:
        raise NonpositiveHeight(f"height must be > 0, got {height}")
    if not tol > 0.0:
        raise InputError(f"tol must be > 0, got {tol}")
    normals, lengths, offsets = poly.normals, poly.lengths, poly.offsets
    gradient_tol = tol * 0.5 * poly.perimeter

    def parts(x):
        d = normals @ x + offsets
        slant = np.hypot(d, h)
        value = 0.5 * float(lengths @ slant)
        grad = normals.T @ (0.5 * lengths * d / slant)
        return slant, value, grad

    x = centroid(poly) if x0 is None else np.asarray(x0, dtype=float).copy()
    slant, value, grad = parts(x)
    gradient_norm = float(np.linalg.norm(grad))
    iterations = 0
    converged = gradient_norm <= gradient_tol

    while not converged and iterations < max_iter:
        step, _ = _search_direction(normals, lengths, h, slant, grad)
        slope = float(grad @ step)
        if slope >= 0.0:
            step = -grad
            slope = -float(grad @ grad)
        t = 1.0
        while True:
            x_try = x + t * step
            slant_try, value_try, grad_try = parts(x_try)
            if value_try <= value + ARMIJO_SLOPE * t * slope:
                break
            t *= BACKTRACK_FACTOR
            if t < 1e-14:
                break
        if value_try > value:
            break  # stalled at rounding level; keep the current iterate
        x, slant, value, grad = x_try, slant_try, value_try, grad_try
        gradient_norm = float(np.linalg.norm(grad))
        iterations += 1
        converged = gradient_norm <= gradient_tol

    if converged:
        for _ in range(_POLISH_STEPS):
            step, used_newton = _search_direction(normals, lengths, h, slant, grad)
            if not used_newton:
                break
            slant_try, value_try, grad_try = parts(x + step)
            norm_try = float(np.linalg.norm(grad_try))
            if norm_try < gradient_norm:
                x = x + step
                slant, value, grad = slant_try, value_try, grad_try
                gradient_norm = norm_try
            else:
                break

    return CenterResult(
        center=x.copy(),
        height=h,
        boundary_area=poly.area + value,
        gradient_norm=gradient_norm,
        distance_profile=signed_distances(poly, x),
        iterations=iterations,
        converged=bool(converged),
    )


def _reference_height(poly: Polygon) -> float:
    if len(poly.vertices) == 3:
        return triangle_incenter(poly).radius
    if poly.is_convex:
        return chebyshev_center(poly).radius
    # nonconvex: 2 * area / perimeter matches the inradius on tangential bases
    return 2.0 * poly.area / poly.perimeter


def optimal_cone(poly: Polygon, tol=1e-10) -> OptimalCone:
    """Minimize ``boundary**3 / volume**2`` over the apex height.

    The one-variable objective ``F(h)`` (with the projection re-optimized
    at every height) diverges at both ends of ``(0, inf)``, so an interior
    minimum is bracketed by sliding the window ``[h0/64, 64*h0]`` around
    the reference height ``h0`` (the Chebyshev radius, or the inradius for
    triangles) and then reduced by golden-section search to relative width
    ``tol``.

    Raises
    ------
    BracketingFailed
        If no interior minimum shows up in the expanded range; the
        exception carries the sampled ``(height, objective)`` trace.
    """
    if not tol > 0.0:
        raise InputError(f"tol must be > 0, got {tol}")
    base_area = poly.area
    values: dict[float, float] = {}
    results: dict[float, CenterResult] = {}
    order: list[CenterResult] = []

    def objective(h: float) -> float:
        if h not in values:
            res = center_at_height(poly, h, tol=tol)
            values[h] = res.boundary_area**3 / (base_area * h / 3.0) ** 2
            results[h] = res
            order.append(res)
        return values[h]

    h_ref = _reference_height(poly)
    lo, mid, hi = h_ref / _BRACKET_FACTOR, h_ref, h_ref * _BRACKET_FACTOR
    f_lo, f_mid, f_hi = objective(lo), objective(mid), objective(hi)
    for _ in range(_MAX_EXPANSIONS):
        if f_lo <= f_mid:
            hi, f_hi, mid, f_mid = mid, f_mid, lo, f_lo
            lo = lo / _BRACKET_FACTOR
            f_lo = objective(lo)
        elif f_hi <= f_mid:
            lo, f_lo, mid, f_mid = mid, f_mid, hi, f_hi
            hi = hi * _BRACKET_FACTOR
            f_hi = objective(hi)
        else:
            break
    else:
        raise BracketingFailed(
            "no interior minimum of the height objective was bracketed",
            trace=sorted((h, values[h]) for h in values),
        )

    a, b = lo, hi
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    f_c, f_d = objective(c), objective(d)
    guard = 0
    while (b - a) > tol * b and guard < 500:
        if f_c <= f_d:
            b, d, f_d = d, c, f_c
            c = b - _INV_GOLDEN * (b - a)
            f_c = objective(c)
        else:
            a, c, f_c = c, d, f_d
            d = a + _INV_GOLDEN * (b - a)
            f_d = objective(d)
        guard += 1

    best_height = min(values, key=lambda h: (values[h], h))
    best = results[best_height]
    ratio = isoperimetric_ratio(poly, Apex(projection=best.center, height=best_height))
    height_over_inradius = (
        best_height / triangle_incenter(poly).radius if len(poly.vertices) == 3 else None
    )
    return OptimalCone(
        center=best.center,
        height=best_height,
        ratio=ratio,
        height_over_inradius=height_over_inradius,
        inner_results=tuple(order),
    )


def height_sweep(poly: Polygon, heights: Sequence, tol=1e-10) -> list[SweepEntry]:
    """Fixed-height solves over ``heights``; failures land in the entry's
    ``error`` field instead of aborting the sweep."""
    entries: list[SweepEntry] = []
    for height in heights:
        try:
            h = float(height)
        except (TypeError, ValueError) as exc:
            entries.append(
                SweepEntry(height=math.nan, result=None, ratio=None, error=str(exc))
            )
            continue
        try:
            result = center_at_height(poly, h, tol=tol)
            ratio = isoperimetric_ratio(poly, Apex(projection=result.center, height=h))
            entries.append(SweepEntry(height=h, result=result, ratio=ratio, error=None))
        except (InputError, SolverError) as exc:
            entries.append(
                SweepEntry(
                    height=h,
                    result=None,
                    ratio=None,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return entries
