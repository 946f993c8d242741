"""Exact 2D kernel: convex hulls, polygon measures, halfplane clipping.

Everything here works on plain (n, 2) vertex arrays in counterclockwise
order.  These routines are the independent oracle the LP-based containment
machinery is checked against, so they deliberately stay elementary: monotone
chain, shoelace sums, Sutherland-Hodgman clipping against a single halfplane.
"""

from __future__ import annotations

import numpy as np

from .halfspace import HalfSpace


class DegenerateGeometryError(ValueError):
    """Raised when an input has no full-dimensional span (e.g. collinear points)."""


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points) -> np.ndarray:
    """Counterclockwise convex hull of a 2D point set (monotone chain).

    Collinear boundary points are dropped, so the result is strictly convex.
    Raises DegenerateGeometryError when the input is collinear.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("expected an (n, 2) point array")
    if pts.shape[0] < 3:
        raise ValueError("need at least 3 points")
    pts = np.unique(pts, axis=0)  # lexicographic sort, duplicates removed
    if pts.shape[0] < 3:
        raise DegenerateGeometryError("fewer than 3 distinct points")

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateGeometryError("input points are collinear")
    return np.array(hull)


def polygon_area(vertices) -> float:
    """Shoelace area; positive for counterclockwise vertex order."""
    v = np.asarray(vertices, dtype=float)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def polygon_centroid(vertices) -> np.ndarray:
    """Area centroid from the shoelace first-moment sums."""
    v = np.asarray(vertices, dtype=float)
    x, y = v[:, 0], v[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    cross = x * yn - xn * y
    area = 0.5 * float(np.sum(cross))
    if area == 0.0:
        raise DegenerateGeometryError("polygon has zero area")
    cx = float(np.sum((x + xn) * cross)) / (6.0 * area)
    cy = float(np.sum((y + yn) * cross)) / (6.0 * area)
    return np.array([cx, cy])


def clip_polygon_halfplane(vertices, hs: HalfSpace) -> np.ndarray:
    """Intersection of a convex polygon with a closed halfplane.

    Sutherland-Hodgman against a single clipping line.  Returns the clipped
    vertex cycle; an empty intersection yields an array with < 3 rows.
    """
    v = np.asarray(vertices, dtype=float)
    s = v @ hs.normal - hs.offset
    out = []
    n = v.shape[0]
    for i in range(n):
        j = (i + 1) % n
        a_in, b_in = s[i] >= 0.0, s[j] >= 0.0
        if a_in:
            out.append(v[i])
        if a_in != b_in:
            # crossing point; same interpolation parameter whichever side is kept
            t = s[i] / (s[i] - s[j])
            out.append(v[i] + t * (v[j] - v[i]))
    return np.array(out) if out else np.empty((0, 2))


def clip_fraction(vertices, hs: HalfSpace) -> float:
    """area(polygon ∩ halfplane) / area(polygon), in [0, 1]."""
    total = polygon_area(vertices)
    if total <= 0.0:
        raise DegenerateGeometryError("polygon must have positive area and ccw order")
    clipped = clip_polygon_halfplane(vertices, hs)
    if clipped.shape[0] < 3:
        return 0.0
    return polygon_area(clipped) / total


def polygon_contains(vertices, p, tol: float = 1e-9):
    """Point-in-convex-polygon via edge halfplane tests (ccw order required).

    The test is distance-based: a point within tol of the boundary counts as
    inside.  Accepts a single point or an (n, 2) array.
    """
    v = np.asarray(vertices, dtype=float)
    edges = np.roll(v, -1, axis=0) - v
    lengths = np.linalg.norm(edges, axis=1)
    if np.any(lengths == 0.0):
        raise DegenerateGeometryError("polygon has a zero-length edge")
    # inward unit normals of a ccw polygon
    normals = np.stack([-edges[:, 1], edges[:, 0]], axis=1) / lengths[:, None]
    offsets = np.sum(normals * v, axis=1)
    pts = np.asarray(p, dtype=float)
    depth = pts @ normals.T - offsets  # (..., n_edges) signed inward distances
    return np.min(depth, axis=-1) >= -tol
