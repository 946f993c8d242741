"""Centered convex-body catalog.

A fixed catalog (cube, centered simplex, cross-polytope, ball, 2D polygon)
rather than general oracle-defined bodies: every kind has an exact uniform
sampler, a closed-form support function, and closed-form centroid/volume,
which is what makes the downstream probabilistic verification trustworthy.

All bodies are centered: the center of mass is the origin.  Cube, simplex,
cross-polytope and ball are centered by construction; a 2D polygon is
recentered by subtracting its exact area centroid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import hull2d
from .halfspace import HalfSpace, unit_vector

# absolute slack on membership inequalities: boundary points count as inside
MEMBERSHIP_TOL = 1e-9

# cube vertex tables grow as 2^d
_MAX_CUBE_VERTEX_DIM = 16


class UnsupportedBodyError(ValueError):
    """Raised when an operation needs a vertex representation the body lacks."""


class BodyKind(Enum):
    CUBE = "cube"
    CENTERED_SIMPLEX = "centered-simplex"
    CROSS_POLYTOPE = "cross-polytope"
    BALL = "ball"
    POLYGON2D = "polygon2d"


_POLYTOPAL = (BodyKind.CUBE, BodyKind.CENTERED_SIMPLEX, BodyKind.CROSS_POLYTOPE, BodyKind.POLYGON2D)


@dataclass(frozen=True)
class ConvexBody:
    """A centered convex body from the catalog.

    `scale` is the half-width for the cube, the edge scale for the simplex,
    the l1 radius for the cross-polytope and the radius for the ball; it is
    unused for explicit polygons.  `vertices` is present exactly for the
    polytopal kinds.
    """

    kind: BodyKind
    dim: int
    scale: float = 1.0
    vertices: np.ndarray | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.scale <= 0.0:
            raise ValueError("scale must be positive")
        if self.vertices is not None:
            v = np.asarray(self.vertices, dtype=float)
            v.setflags(write=False)
            object.__setattr__(self, "vertices", v)

    @property
    def is_polytopal(self) -> bool:
        return self.kind in _POLYTOPAL


def cube(dim: int, scale: float = 1.0) -> ConvexBody:
    """Axis-aligned cube [-scale, scale]^dim."""
    if dim > _MAX_CUBE_VERTEX_DIM:
        raise ValueError(f"cube vertex table has 2^{dim} rows; max dim is {_MAX_CUBE_VERTEX_DIM}")
    corners = np.array(
        [[(scale if (i >> k) & 1 else -scale) for k in range(dim)] for i in range(2**dim)]
    )
    return ConvexBody(BodyKind.CUBE, dim, scale, corners)


def centered_simplex(dim: int, scale: float = 1.0) -> ConvexBody:
    """The simplex conv{0, s*e_1, ..., s*e_d} translated so its centroid is the origin."""
    v = np.vstack([np.zeros(dim), scale * np.eye(dim)])
    v -= v.mean(axis=0)  # simplex centroid = vertex mean
    return ConvexBody(BodyKind.CENTERED_SIMPLEX, dim, scale, v)


def cross_polytope(dim: int, scale: float = 1.0) -> ConvexBody:
    """The l1 ball {x : ||x||_1 <= scale}, vertices ±scale*e_i."""
    v = np.vstack([scale * np.eye(dim), -scale * np.eye(dim)])
    return ConvexBody(BodyKind.CROSS_POLYTOPE, dim, scale, v)


def ball(dim: int, radius: float = 1.0) -> ConvexBody:
    """The Euclidean ball {x : ||x||_2 <= radius}."""
    return ConvexBody(BodyKind.BALL, dim, radius)


def polygon2d(vertices) -> ConvexBody:
    """Strictly convex polygon, vertices in counterclockwise order, recentered.

    The constructor subtracts the exact area centroid, so the resulting body
    is centered regardless of where the input polygon sits.
    """
    v = np.asarray(vertices, dtype=float)
    if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 3:
        raise ValueError("expected an (n, 2) vertex array with n >= 3")
    if hull2d.polygon_area(v) <= 0.0:
        raise ValueError("vertices must be in counterclockwise order")
    rolled = np.roll(v, -1, axis=0)
    nxt = np.roll(v, -2, axis=0)
    crosses = (rolled[:, 0] - v[:, 0]) * (nxt[:, 1] - rolled[:, 1]) - (
        rolled[:, 1] - v[:, 1]
    ) * (nxt[:, 0] - rolled[:, 0])
    if np.any(crosses <= 0.0):
        raise ValueError("polygon must be strictly convex (no collinear vertices)")
    v = v - hull2d.polygon_centroid(v)
    return ConvexBody(BodyKind.POLYGON2D, 2, 1.0, v)


# ---------------------------------------------------------------------------
# closed-form metrics


def centroid(body: ConvexBody) -> np.ndarray:
    """Center of mass; the origin for every catalog body (checked, not assumed)."""
    if body.kind in (BodyKind.CUBE, BodyKind.CROSS_POLYTOPE, BodyKind.BALL):
        return np.zeros(body.dim)  # symmetric through the origin
    if body.kind is BodyKind.CENTERED_SIMPLEX:
        return body.vertices.mean(axis=0)
    return hull2d.polygon_centroid(body.vertices)


def volume(body: ConvexBody) -> float:
    s, d = body.scale, body.dim
    if body.kind is BodyKind.CUBE:
        return (2.0 * s) ** d
    if body.kind is BodyKind.CENTERED_SIMPLEX:
        return s**d / math.factorial(d)
    if body.kind is BodyKind.CROSS_POLYTOPE:
        return (2.0 * s) ** d / math.factorial(d)
    if body.kind is BodyKind.BALL:
        return s**d * math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)
    return hull2d.polygon_area(body.vertices)


def support_function(body: ConvexBody, u) -> float:
    """h(u) = max_{x in body} <u, x> for a unit direction u."""
    u = unit_vector(u, body.dim)
    if body.kind is BodyKind.CUBE:
        return body.scale * float(np.abs(u).sum())
    if body.kind is BodyKind.BALL:
        return body.scale
    return float(np.max(body.vertices @ u))


def supporting_halfspace(body: ConvexBody, u, theta: float) -> HalfSpace:
    """The halfspace {x : <u, x> >= theta*h(u)} supporting theta*body from outside.

    Its boundary touches the scaled body at theta times a support point; its
    interior misses the scaled body's interior.
    """
    if not 0.0 < theta < 1.0:
        raise ValueError("theta must lie in (0, 1)")
    u = unit_vector(u, body.dim)
    return HalfSpace(u, theta * support_function(body, u))


def contains_point(body: ConvexBody, p, tol: float = MEMBERSHIP_TOL):
    """Closed-set membership; boundary counts as inside within tol.

    Accepts a single point of shape (d,) or a batch of shape (n, d) and
    returns a bool (respectively a bool array).
    """
    x = np.asarray(p, dtype=float)
    if x.shape[-1] != body.dim:
        raise ValueError(f"point dimension {x.shape[-1]} != body dimension {body.dim}")
    s = body.scale
    if body.kind is BodyKind.CUBE:
        return np.max(np.abs(x), axis=-1) <= s + tol
    if body.kind is BodyKind.BALL:
        return np.linalg.norm(x, axis=-1) <= s + tol
    if body.kind is BodyKind.CROSS_POLYTOPE:
        return np.sum(np.abs(x), axis=-1) <= s + tol
    if body.kind is BodyKind.CENTERED_SIMPLEX:
        # undo the centering shift: y must satisfy y >= 0, sum(y) <= s
        y = x + s / (body.dim + 1.0)
        return (np.min(y, axis=-1) >= -tol) & (np.sum(y, axis=-1) <= s + tol)
    return hull2d.polygon_contains(body.vertices, x, tol)


# ---------------------------------------------------------------------------
# exact uniform samplers


def sample_uniform(body: ConvexBody, rng: np.random.Generator, size: int | None = None):
    """Exact uniform sample(s) from the body.

    Returns shape (d,) for size=None, else (size, d).  Each kind uses its
    exact scheme: per-coordinate uniform (cube), normalized exponentials with
    random signs (cross-polytope), Dirichlet barycentric weights (simplex),
    gaussian direction with U^(1/d) radius (ball), and area-weighted fan
    triangles with Dirichlet weights (polygon).
    """
    n = 1 if size is None else int(size)
    if n < 1:
        raise ValueError("size must be >= 1")
    d, s = body.dim, body.scale

    if body.kind is BodyKind.CUBE:
        pts = rng.uniform(-s, s, size=(n, d))
    elif body.kind is BodyKind.BALL:
        g = rng.standard_normal((n, d))
        norms = np.linalg.norm(g, axis=1, keepdims=True)
        norms[norms == 0.0] = 1.0
        radii = s * rng.uniform(size=(n, 1)) ** (1.0 / d)
        pts = g / norms * radii
    elif body.kind is BodyKind.CROSS_POLYTOPE:
        # (E_1..E_d)/(E_1+..+E_{d+1}) with random signs is uniform on the l1 ball
        e = rng.standard_exponential((n, d + 1))
        signs = 2.0 * rng.integers(0, 2, size=(n, d)) - 1.0
        pts = s * signs * e[:, :d] / e.sum(axis=1, keepdims=True)
    elif body.kind is BodyKind.CENTERED_SIMPLEX:
        w = rng.dirichlet(np.ones(d + 1), size=n)
        pts = w @ body.vertices
    elif body.kind is BodyKind.POLYGON2D:
        pts = _sample_polygon(body.vertices, rng, n)
    else:  # pragma: no cover
        raise UnsupportedBodyError(f"no sampler for {body.kind}")
    return pts[0] if size is None else pts


def _sample_polygon(vertices: np.ndarray, rng: np.random.Generator, n: int) -> np.ndarray:
    """Fan-triangulate from the centroid (origin), pick triangles by area."""
    v = vertices
    w = np.roll(v, -1, axis=0)
    areas = 0.5 * np.abs(v[:, 0] * w[:, 1] - w[:, 0] * v[:, 1])  # triangle (0, v_i, v_{i+1})
    idx = rng.choice(len(v), size=n, p=areas / areas.sum())
    bary = rng.dirichlet(np.ones(3), size=n)
    return bary[:, 1:2] * v[idx] + bary[:, 2:3] * w[idx]  # third corner is the origin


# ---------------------------------------------------------------------------
# exact 2D clipping and Monte Carlo cap measurement


def as_polygon_vertices(body: ConvexBody) -> np.ndarray:
    """Counterclockwise vertex cycle of a 2-dimensional polytopal body."""
    if not (body.is_polytopal and body.dim == 2):
        raise UnsupportedBodyError("need a 2D polytopal body")
    if body.kind is BodyKind.POLYGON2D:
        return body.vertices
    return hull2d.convex_hull_2d(body.vertices)


def clip_fraction_exact_2d(body: ConvexBody, f: HalfSpace) -> float:
    """vol(body ∩ f) / vol(body) by exact polygon-halfplane clipping (d=2 only)."""
    return hull2d.clip_fraction(as_polygon_vertices(body), f)


@dataclass(frozen=True)
class CapEstimate:
    """Monte Carlo estimate of vol(body ∩ halfspace) / vol(body)."""

    fraction: float
    ci_low: float
    ci_high: float
    n: int

    def __post_init__(self):
        if not self.ci_low <= self.fraction <= self.ci_high:
            raise ValueError("confidence interval must bracket the point estimate")


def cap_fraction_mc(
    body: ConvexBody, f: HalfSpace, n: int, rng: np.random.Generator
) -> CapEstimate:
    """Estimate the cap fraction from n uniform samples, with Wilson 99% CI."""
    from ..stats import wilson_interval

    if n < 100:
        raise ValueError("need at least 100 samples")
    pts = sample_uniform(body, rng, size=n)
    hits = int(np.count_nonzero(f.contains(pts)))
    low, high = wilson_interval(hits, n)
    return CapEstimate(hits / n, low, high, n)


# ---------------------------------------------------------------------------
# body-spec JSON (the CLI's body description format)

_SCALE_KINDS = {
    BodyKind.CUBE: cube,
    BodyKind.CENTERED_SIMPLEX: centered_simplex,
    BodyKind.CROSS_POLYTOPE: cross_polytope,
    BodyKind.BALL: ball,
}


def body_from_spec(spec: dict) -> ConvexBody:
    """Build a body from {"kind", "dim", "scale", "vertices"} (JSON-friendly)."""
    try:
        kind = BodyKind(spec["kind"])
    except (KeyError, ValueError):
        names = ", ".join(k.value for k in BodyKind)
        raise ValueError(f"body spec needs a 'kind' among: {names}") from None
    if kind is BodyKind.POLYGON2D:
        if "vertices" not in spec:
            raise ValueError("polygon2d body spec needs a 'vertices' list")
        return polygon2d(spec["vertices"])
    if "dim" not in spec:
        raise ValueError(f"{kind.value} body spec needs 'dim'")
    return _SCALE_KINDS[kind](int(spec["dim"]), float(spec.get("scale", 1.0)))


def body_to_spec(body: ConvexBody) -> dict:
    if body.kind is BodyKind.POLYGON2D:
        return {"kind": body.kind.value, "dim": 2, "vertices": body.vertices.tolist()}
    return {"kind": body.kind.value, "dim": body.dim, "scale": body.scale}
