"""Closed halfspaces with unit outward normals."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# how far an input direction may deviate from unit length before we reject it
UNIT_INPUT_TOL = 1e-9


def unit_vector(u, dim: int | None = None) -> np.ndarray:
    """Validate that u is (approximately) unit length and renormalize exactly.

    Accepts directions within UNIT_INPUT_TOL of unit length, then divides by
    the norm so downstream code can rely on ||u|| = 1 to machine precision.
    """
    v = np.asarray(u, dtype=float).reshape(-1)
    if dim is not None and v.shape[0] != dim:
        raise ValueError(f"direction has dimension {v.shape[0]}, expected {dim}")
    n = float(np.linalg.norm(v))
    if abs(n - 1.0) > UNIT_INPUT_TOL:
        raise ValueError(f"direction must be unit length, got norm {n!r}")
    return v / n


@dataclass(frozen=True)
class HalfSpace:
    """Closed halfspace {x : <normal, x> >= offset}.

    The normal is the outward direction of the halfspace boundary: points
    deeper inside the halfspace have larger inner product with it.
    """

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = unit_vector(self.normal)
        n.setflags(write=False)
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def dim(self) -> int:
        return self.normal.shape[0]

    def signed_excess(self, x):
        """<normal, x> - offset; nonnegative exactly on the halfspace."""
        return np.asarray(x, dtype=float) @ self.normal - self.offset

    def contains(self, x, tol: float = 0.0):
        """Membership test; accepts a single point or an (n, d) array."""
        return self.signed_excess(x) >= -tol

    def complement(self) -> HalfSpace:
        """Closed halfspace on the other side of the same boundary."""
        return HalfSpace(-self.normal, -self.offset)
