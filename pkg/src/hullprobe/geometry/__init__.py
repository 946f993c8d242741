from .bodies import (
    BodyKind,
    CapEstimate,
    ConvexBody,
    UnsupportedBodyError,
    as_polygon_vertices,
    ball,
    body_from_spec,
    body_to_spec,
    cap_fraction_mc,
    centered_simplex,
    centroid,
    clip_fraction_exact_2d,
    contains_point,
    cross_polytope,
    cube,
    polygon2d,
    sample_uniform,
    support_function,
    supporting_halfspace,
    volume,
)
from .halfspace import HalfSpace, unit_vector
from .hull2d import (
    DegenerateGeometryError,
    clip_fraction,
    clip_polygon_halfplane,
    convex_hull_2d,
    polygon_area,
    polygon_centroid,
    polygon_contains,
)

__all__ = [
    "BodyKind",
    "CapEstimate",
    "ConvexBody",
    "DegenerateGeometryError",
    "HalfSpace",
    "UnsupportedBodyError",
    "as_polygon_vertices",
    "ball",
    "body_from_spec",
    "body_to_spec",
    "cap_fraction_mc",
    "centered_simplex",
    "centroid",
    "clip_fraction",
    "clip_fraction_exact_2d",
    "clip_polygon_halfplane",
    "contains_point",
    "convex_hull_2d",
    "cross_polytope",
    "cube",
    "polygon2d",
    "polygon_area",
    "polygon_centroid",
    "polygon_contains",
    "sample_uniform",
    "support_function",
    "supporting_halfspace",
    "unit_vector",
    "volume",
]
