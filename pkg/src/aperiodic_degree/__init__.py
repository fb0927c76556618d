"""Exact substitution tilings and their vertex-degree statistics."""

from .ring import AlgebraicPoint, CoordSystem, Family, RingScalar, embed, inflate, deflate, reflect, rotate, system
from .substitution import Patch, Tile, TileKind, generate, generate_series, prototile, subdivide
from .tilegraph import (
    DegreeModel,
    DegreeSummary,
    Measure,
    TilingGraph,
    Window,
    WindowMode,
    build_graph,
    central_window,
    compat_average,
    summarize,
)
from .a2 import avg_degree, limit_avg_degree, middle_points, t_count, v_count, verify_against_graphs
from .regression import DegreeSeries, LinearFit, difference_pairs, fit_ols, limit_estimate

__all__ = [
    "AlgebraicPoint", "CoordSystem", "Family", "RingScalar", "embed", "inflate", "deflate", "reflect",
    "rotate", "system", "Patch", "Tile", "TileKind", "generate", "generate_series", "prototile",
    "subdivide", "DegreeModel", "DegreeSummary", "Measure", "TilingGraph", "Window", "WindowMode",
    "build_graph", "central_window", "compat_average", "summarize", "avg_degree", "limit_avg_degree",
    "middle_points", "t_count", "v_count", "verify_against_graphs", "DegreeSeries", "LinearFit",
    "difference_pairs", "fit_ols", "limit_estimate",
]
__version__ = "0.1.0"
