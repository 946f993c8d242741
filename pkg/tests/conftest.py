import numpy as np
import pytest

from hullprobe.geometry.bodies import ConvexBody, polygon2d
from hullprobe.geometry.hull2d import DegenerateGeometryError, convex_hull_2d


def random_centered_polygon(rng: np.random.Generator, lo: int = 5, hi: int = 12) -> ConvexBody:
    """Random centered convex polygon with lo..hi vertices.

    Takes the hull of 15 uniform points in the square and retries until the
    vertex count lands in range; polygon2d recenters at the exact centroid.
    """
    while True:
        pts = rng.uniform(-1.0, 1.0, size=(15, 2))
        try:
            hull = convex_hull_2d(pts)
        except DegenerateGeometryError:
            continue
        if not lo <= hull.shape[0] <= hi:
            continue
        try:
            return polygon2d(hull)
        except (DegenerateGeometryError, ValueError):
            continue


@pytest.fixture
def polygon_factory():
    return random_centered_polygon
