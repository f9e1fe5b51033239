"""Sparse geometric spanners with few extra edges beyond a spanning tree.

The package builds connected graphs on finite point sets using at most
n-1+k edges and measures how far their shortest-path metric strays from
the Euclidean one (the dilation). Construction routes: a Delaunay/MST
based planar builder for 2D, a greedy-spanner pipeline for arbitrary
dimension, and a grid-bucketing builder whose guarantee depends on the
spread of the input. Closed-form lower bounds and small brute-force
optima are available for cross-checking measured values.
"""

from .bounded_spread import bounded_spread_spanner
from .bounds import (
    BOUND_KINDS,
    BoundSpec,
    analytic_bound,
    brute_min_graph,
    brute_min_tree,
    inscribed_triangle_min_perimeter,
)
from .core import (
    InputError,
    Point,
    PointSet,
    SpannerParams,
    distance,
    load_points,
    parse_points,
    save_points,
    spread,
)
from .delaunay import delaunay, delaunay_triangles
from .generators import (
    GridSquaresSpec,
    gen_circle,
    gen_convex_rect,
    gen_grid_squares,
    gen_multi_circle,
    gen_random,
)
from .geograph import (
    DilationReport,
    GeoGraph,
    dilation,
    dilation_between,
    graph_distance,
    load_graph,
    parse_graph,
    save_graph,
)
from .highd import HighDResult, greedy_tspanner, sparse_spanner_highd
from .mst import emst_2d, kruskal, mst_of_graph
from .spanner2d import sparse_spanner_2d
from .tree_partition import TreePartition, partition_tree

__version__ = "0.1.0"

__all__ = [
    "BOUND_KINDS",
    "BoundSpec",
    "DilationReport",
    "GeoGraph",
    "GridSquaresSpec",
    "HighDResult",
    "InputError",
    "Point",
    "PointSet",
    "SpannerParams",
    "TreePartition",
    "analytic_bound",
    "bounded_spread_spanner",
    "brute_min_graph",
    "brute_min_tree",
    "delaunay",
    "delaunay_triangles",
    "dilation",
    "dilation_between",
    "distance",
    "emst_2d",
    "gen_circle",
    "gen_convex_rect",
    "gen_grid_squares",
    "gen_multi_circle",
    "gen_random",
    "graph_distance",
    "greedy_tspanner",
    "inscribed_triangle_min_perimeter",
    "kruskal",
    "load_graph",
    "load_points",
    "mst_of_graph",
    "parse_graph",
    "parse_points",
    "partition_tree",
    "save_graph",
    "save_points",
    "sparse_spanner_2d",
    "sparse_spanner_highd",
    "spread",
]
