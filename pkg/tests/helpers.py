"""Shared generators and independent reference implementations for tests.

The reference code here (shoelace, ray casting) is deliberately written
from scratch so the package is checked against something it does not
share code with.
"""

import numpy as np
from scipy.spatial import ConvexHull


def shoelace(vertices) -> float:
    """Signed polygon area, plain-loop reference implementation."""
    total = 0.0
    m = len(vertices)
    for i in range(m):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % m]
        total += x1 * y2 - x2 * y1
    return 0.5 * total


def ray_casting_contains(vertices, point) -> bool:
    """Even-odd crossing test for point-in-polygon."""
    x, y = float(point[0]), float(point[1])
    inside = False
    m = len(vertices)
    for i in range(m):
        x1, y1 = vertices[i]
        x2, y2 = vertices[(i + 1) % m]
        if (y1 > y) != (y2 > y):
            t = (y - y1) / (y2 - y1)
            if x < x1 + t * (x2 - x1):
                inside = not inside
    return inside


def random_triangle(rng, low=-10.0, high=10.0, min_area=0.1) -> np.ndarray:
    """Triangle with vertices uniform in the square and area >= min_area."""
    while True:
        verts = rng.uniform(low, high, size=(3, 2))
        if abs(shoelace(verts)) >= min_area:
            return verts


def random_convex_polygon(rng, n_min=3, n_max=8, scale=5.0, min_area=1.0) -> np.ndarray:
    """Convex polygon with n_min..n_max vertices, CCW order.

    Takes a random-size subset of the convex hull of a scattered point
    cloud; any subsequence of hull vertices stays convex.
    """
    target = int(rng.integers(n_min, n_max + 1))
    while True:
        cloud = rng.uniform(-scale, scale, size=(16, 2))
        hull = cloud[ConvexHull(cloud).vertices]
        if len(hull) < target:
            continue
        idx = np.sort(rng.choice(len(hull), size=target, replace=False))
        verts = hull[idx]
        if shoelace(verts) >= min_area:
            return verts


def random_star_polygon(rng, n=8, r_min=1.0, r_max=5.0) -> np.ndarray:
    """Simple, generally nonconvex polygon, star-shaped about the origin."""
    while True:
        angles = np.sort(rng.uniform(0.0, 2.0 * np.pi, size=n))
        if np.min(np.diff(angles)) < 0.05:
            continue
        radii = rng.uniform(r_min, r_max, size=n)
        verts = np.column_stack([radii * np.cos(angles), radii * np.sin(angles)])
        if abs(shoelace(verts)) >= 1.0:
            return verts


def rotate_translate(points, angle, shift) -> np.ndarray:
    """Apply a rigid motion to an (n, 2) array of points."""
    c, s = np.cos(angle), np.sin(angle)
    rotation = np.array([[c, -s], [s, c]])
    return np.asarray(points, dtype=float) @ rotation.T + np.asarray(shift, dtype=float)
