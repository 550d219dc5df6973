"""Cone geometry over a polygon base.

For an apex with base-plane projection ``p`` and height ``h`` over a base
polygon, the cone boundary consists of the base plus one lateral triangle
per edge.  The face over an edge of length ``a`` whose line has signed
distance ``d`` from ``p`` has area ``a * sqrt(d**2 + h**2) / 2``; only the
squared distance enters, so the lateral area is well defined whether or
not the projection lies inside the base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, NonpositiveArgument, NonpositiveHeight
from .geometry import Polygon

__all__ = [
    "Apex",
    "ConeMetrics",
    "OPTIMAL_HEIGHT_RATIO",
    "lateral_area",
    "boundary_area",
    "boundary_areas",
    "cone_volume",
    "isoperimetric_ratio",
    "cone_metrics",
    "phi",
    "equal_angle_residual",
]

OPTIMAL_HEIGHT_RATIO = 2.0 * math.sqrt(2.0)
"""Argmin of :func:`phi`: the best height over any base with an inscribed
circle touching every edge equals this multiple of the circle's radius."""


@dataclass(frozen=True, eq=False)
class Apex:
    """Cone vertex, given by its base-plane projection and height > 0."""

    projection: np.ndarray
    height: float

    def __post_init__(self):
        projection = np.asarray(self.projection, dtype=float)
        if projection.shape != (2,) or not np.all(np.isfinite(projection)):
            raise InputError("apex projection must be a finite 2-D point")
        height = float(self.height)
        if not height > 0.0:
            raise NonpositiveHeight(f"apex height must be > 0, got {self.height}")
        object.__setattr__(self, "projection", projection)
        object.__setattr__(self, "height", height)


@dataclass(frozen=True, eq=False)
class ConeMetrics:
    """All scalar quantities of one cone: areas, volume, and the ratio."""

    base_area: float
    lateral_area: float
    boundary_area: float
    volume: float
    ratio: float


def _distances(poly: Polygon, point) -> np.ndarray:
    return poly.normals @ np.asarray(point, dtype=float) + poly.offsets


def lateral_area(poly: Polygon, apex: Apex) -> float:
    """Total area of the lateral faces, ``sum(a_i * sqrt(d_i**2 + h**2)) / 2``."""
    d = _distances(poly, apex.projection)
    return 0.5 * float(poly.lengths @ np.hypot(d, apex.height))


def boundary_area(poly: Polygon, apex: Apex) -> float:
    """Base area plus lateral area."""
    return poly.area + lateral_area(poly, apex)


def boundary_areas(poly: Polygon, points, height) -> np.ndarray:
    """Boundary areas for many apex projections at one height.

    Parameters
    ----------
    points : array_like, shape (n, 2)
    height : positive float

    Returns
    -------
    ndarray, shape (n,)
    """
    h = float(height)
    if not h > 0.0:
        raise NonpositiveHeight(f"height must be > 0, got {height}")
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    d = pts @ poly.normals.T + poly.offsets
    return poly.area + 0.5 * (np.hypot(d, h) @ poly.lengths)


def cone_volume(poly: Polygon, height) -> float:
    """Cone volume ``base_area * height / 3``."""
    h = float(height)
    if not h > 0.0:
        raise NonpositiveHeight(f"height must be > 0, got {height}")
    return poly.area * h / 3.0


def isoperimetric_ratio(poly: Polygon, apex: Apex) -> float:
    """Scale-invariant quality measure ``boundary_area**3 / volume**2``."""
    return boundary_area(poly, apex) ** 3 / cone_volume(poly, apex.height) ** 2


def cone_metrics(poly: Polygon, apex: Apex) -> ConeMetrics:
    """Evaluate every cone quantity at once."""
    lateral = lateral_area(poly, apex)
    boundary = poly.area + lateral
    volume = cone_volume(poly, apex.height)
    return ConeMetrics(
        base_area=poly.area,
        lateral_area=lateral,
        boundary_area=boundary,
        volume=volume,
        ratio=boundary**3 / volume**2,
    )


def phi(t) -> float:
    """One-variable ratio profile ``(1 + sqrt(1 + t**2))**3 / t**2``.

    For a base with an inscribed circle of radius ``r`` touching every
    edge, the cone with apex over the circle center at height ``h`` has
    ratio ``(9 * base_area / r**2) * phi(h / r)``; the profile attains its
    minimum value 8 at ``t = 2 * sqrt(2)``.
    """
    t = float(t)
    if not t > 0.0:
        raise NonpositiveArgument(f"phi needs a positive argument, got {t}")
    return (1.0 + math.sqrt(1.0 + t * t)) ** 3 / (t * t)


def equal_angle_residual(poly: Polygon, point, height) -> float:
    """Spread of the lateral-face inclinations at one apex projection.

    Returns ``max_i s_i - min_i s_i`` where ``s_i = d_i / sqrt(d_i**2 +
    h**2)`` is the cosine of the dihedral angle between lateral face ``i``
    and the base plane.  Zero exactly when all faces meet the base at the
    same angle, as they do over the incenter of a triangle.
    """
    h = float(height)
    if not h > 0.0:
        raise NonpositiveHeight(f"height must be > 0, got {height}")
    d = _distances(poly, point)
    s = d / np.hypot(d, h)
    return float(s.max() - s.min())
