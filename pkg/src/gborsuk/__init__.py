"""Equivariant covers, Borsuk graphs and colouring certificates."""
from .group import GroupTable, build_cyclic, build_from_table, build_product, build_symmetric, parse_group
from .complex import (GComplex, barycentric, check_free, classifying_space, cycle_complex,
                      group_complex, join, medial_subdivide, medial_subdivide_2d, medial_subdivide_3d)
from .quotient import QuotGraph, borsuk_graph_points, quotient_graph
from .solver import ColoringProblem, exact_chromatic, extend_precoloring, max_clique
from .covers import (CoverColoring, bounds, circle_cover, join_cover, one_dim_cover, pipeline,
                     verify_cover)

__all__ = [
    "GroupTable", "build_cyclic", "build_from_table", "build_product", "build_symmetric", "parse_group",
    "GComplex", "barycentric", "check_free", "classifying_space", "cycle_complex", "group_complex",
    "join", "medial_subdivide", "medial_subdivide_2d", "medial_subdivide_3d",
    "QuotGraph", "borsuk_graph_points", "quotient_graph",
    "ColoringProblem", "exact_chromatic", "extend_precoloring", "max_clique",
    "CoverColoring", "bounds", "circle_cover", "join_cover", "one_dim_cover", "pipeline", "verify_cover",
]
__version__ = "0.1.0"
