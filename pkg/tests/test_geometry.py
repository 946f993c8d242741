import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullprobe.geometry.halfspace import HalfSpace, unit_vector
from hullprobe.geometry.hull2d import (
    DegenerateGeometryError,
    clip_fraction,
    clip_polygon_halfplane,
    convex_hull_2d,
    polygon_area,
    polygon_centroid,
    polygon_contains,
)

SQUARE = np.array([[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]])
TRIANGLE = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])


# ---------------------------------------------------------------------------
# halfspaces


def test_unit_vector_normalizes_near_unit_input():
    u = unit_vector([0.6, 0.8])
    assert math.isclose(float(u @ u), 1.0, rel_tol=1e-15)
    v = unit_vector([0.6 + 2e-10, 0.8])
    assert math.isclose(float(v @ v), 1.0, rel_tol=1e-15)


def test_unit_vector_rejects_non_unit():
    with pytest.raises(ValueError):
        unit_vector([1.0, 1.0])
    with pytest.raises(ValueError):
        unit_vector([0.0, 0.0])
    with pytest.raises(ValueError):
        unit_vector([0.6, 0.8], dim=3)


def test_halfspace_contains_and_excess():
    hs = HalfSpace(np.array([0.0, 1.0]), 0.25)
    assert hs.contains([0.0, 0.3])
    assert not hs.contains([5.0, 0.2])
    assert math.isclose(hs.signed_excess([2.0, 1.0]), 0.75)
    comp = hs.complement()
    assert comp.contains([5.0, 0.2])
    assert math.isclose(comp.offset, -0.25)


def test_halfspace_normal_is_read_only():
    hs = HalfSpace(np.array([1.0, 0.0]), 0.0)
    with pytest.raises(ValueError):
        hs.normal[0] = 2.0


# ---------------------------------------------------------------------------
# hulls


def test_hull_of_square_with_interior_noise():
    rng = np.random.default_rng(0)
    inner = rng.uniform(-0.9, 0.9, size=(40, 2))
    hull = convex_hull_2d(np.vstack([SQUARE, inner]))
    assert hull.shape == (4, 2)
    assert {tuple(v) for v in hull} == {tuple(v) for v in SQUARE}
    assert polygon_area(hull) == pytest.approx(4.0)


def test_hull_rejects_degenerate_input():
    with pytest.raises(DegenerateGeometryError):
        convex_hull_2d([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [3.0, 3.0]])
    with pytest.raises(DegenerateGeometryError):
        convex_hull_2d([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0]])
    with pytest.raises(ValueError):
        convex_hull_2d([[0.0, 0.0], [1.0, 1.0]])


def test_area_and_centroid_of_triangle():
    assert polygon_area(TRIANGLE) == pytest.approx(0.5)
    assert polygon_centroid(TRIANGLE) == pytest.approx([1.0 / 3.0, 1.0 / 3.0])


def test_centroid_is_translation_equivariant():
    shifted = TRIANGLE + np.array([3.0, -2.0])
    assert polygon_centroid(shifted) == pytest.approx([3.0 + 1 / 3, -2.0 + 1 / 3])


# ---------------------------------------------------------------------------
# clipping


def test_clip_square_by_axis_plane():
    hs = HalfSpace(np.array([1.0, 0.0]), 0.0)  # x >= 0
    clipped = clip_polygon_halfplane(SQUARE, hs)
    assert polygon_area(clipped) == pytest.approx(2.0)
    assert clip_fraction(SQUARE, hs) == pytest.approx(0.5)


def test_clip_keeps_all_or_nothing():
    inside = HalfSpace(np.array([1.0, 0.0]), -5.0)
    outside = HalfSpace(np.array([1.0, 0.0]), 5.0)
    assert clip_fraction(SQUARE, inside) == pytest.approx(1.0)
    assert clip_fraction(SQUARE, outside) == 0.0
    assert clip_polygon_halfplane(SQUARE, outside).shape == (0, 2)


def test_clip_triangle_known_fraction():
    # x >= 0.5 cuts a similar triangle with ratio 1/2 -> a quarter of the area
    hs = HalfSpace(np.array([1.0, 0.0]), 0.5)
    assert clip_fraction(TRIANGLE, hs) == pytest.approx(0.25)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.floats(0.0, 2 * math.pi), st.floats(-0.8, 0.8))
def test_complementary_clips_sum_to_one(seed, angle, offset):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1.0, 1.0, size=(12, 2))
    try:
        poly = convex_hull_2d(pts)
    except DegenerateGeometryError:
        return
    hs = HalfSpace(np.array([math.cos(angle), math.sin(angle)]), offset)
    a = clip_fraction(poly, hs)
    b = clip_fraction(poly, hs.complement())
    assert 0.0 <= a <= 1.0
    assert a + b == pytest.approx(1.0, abs=1e-9)


def test_polygon_contains_batch_and_tolerance():
    qs = np.array([[0.0, 0.0], [0.999, 0.0], [1.0 + 1e-6, 0.0], [2.0, 2.0]])
    got = polygon_contains(SQUARE, qs)
    assert got.tolist() == [True, True, False, False]
    assert polygon_contains(SQUARE, [1.0 + 1e-12, 0.0])
    # negative tolerance demands strict interior depth
    assert not polygon_contains(SQUARE, [1.0, 0.0], tol=-1e-6)
    assert polygon_contains(SQUARE, [0.0, 0.0], tol=-0.5)
