"""Exact intrinsic distances on the Sierpinski gasket from code representations."""

from ._core import (
    Code,
    DistanceResult,
    Error,
    Geodesic,
    IdenticalCodes,
    LevelGraph,
    MalformedCode,
    NotAJunction,
    SamePoint,
    DepthTooSmall,
    LevelTooLarge,
    VertexNotFound,
    canonicalize,
    distance,
    geodesic,
    indicator_bits,
    is_junction,
    junction_triple,
    oracle_distance,
    oracle_tolerance,
    parse_code,
    periodic_bit_sum,
    project,
    graph_distance,
    render_svg,
    representations,
    run_check,
    same_point,
    split_index,
    symbol_at,
    to_barycentric,
    to_cartesian,
    twin,
    twin_coordinates_agree,
)

__all__ = [name for name in dir() if not name.startswith("_")]
