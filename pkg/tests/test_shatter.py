import numpy as np
import pytest

from hullprobe.epsnet.shatter import MAX_POINTS, is_shattered, vc_dimension_halfspaces

SQUARE = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


def test_single_point_is_shattered():
    assert is_shattered([[1.5, -2.0]])
    assert vc_dimension_halfspaces([[1.5, -2.0]]) == 1


def test_duplicates_cannot_be_split():
    assert not is_shattered([[1.0, 1.0], [1.0, 1.0]])
    assert vc_dimension_halfspaces([[1.0, 1.0], [1.0, 1.0]]) == 1


def test_triangle_is_shattered_square_is_not():
    assert is_shattered(SQUARE[:3])
    # diagonal corners of the square cannot be cut from the other diagonal
    assert not is_shattered(SQUARE)
    assert vc_dimension_halfspaces(SQUARE) == 3


def test_collinear_points_cap_at_two():
    line = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [3.0, 3.0]])
    assert vc_dimension_halfspaces(line) == 2


def test_dimension_one():
    xs = np.array([[0.0], [1.0], [2.0], [5.0]])
    assert vc_dimension_halfspaces(xs) == 2  # d + 1 on the line
    assert is_shattered(xs[:2])
    assert not is_shattered(xs[:3])  # middle point is trapped


def test_simplex_corners_achieve_d_plus_one():
    for d in (1, 2, 3, 4):
        corners = np.vstack([np.zeros(d), np.eye(d)])
        assert is_shattered(corners)
        assert vc_dimension_halfspaces(corners) == d + 1


def test_radon_bound_on_random_sets():
    rng = np.random.default_rng(7)
    for _ in range(40):
        d = int(rng.integers(1, 4))
        n = int(rng.integers(2, 8))
        pts = rng.normal(size=(n, d))
        assert vc_dimension_halfspaces(pts) <= d + 1


def test_brute_force_cap():
    with pytest.raises(ValueError):
        is_shattered(np.zeros((MAX_POINTS + 1, 2)))
    with pytest.raises(ValueError):
        vc_dimension_halfspaces(np.zeros((0, 2)))
