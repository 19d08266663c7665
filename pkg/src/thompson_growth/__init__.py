"""Exact growth series of Thompson's group F with respect to {x0, x1}.

f(n) counts elements of word length n and g(n) counts geodesic words of
length n.  Two counting methods are provided (a traversal of geodesics and a
column-by-column transfer method on forest diagrams), plus a breadth-first
oracle and tools for growth-rate bounds.
"""
from .algorithm_a import count_geodesics, count_sphere, enumerate_geodesics, next_geodesic
from .algorithm_b import growth_series, iter_growth
from .forest_core import (
    Generator, GapLabel, ForestDiagram, bfs_sphere_counts, canonical_key, column_weight,
    diagram_of, geodesic_length, identity_diagram, label_gaps, multiply, parse_word, reduce,
    weight,
)
from .geodesic_classifier import classify, classify_incremental
from .series import GrowthSeries, read_bfile, write_bfile
from .series_analysis import (
    amplitude_fit, check_submultiplicative, doubling_estimates, fekete_bounds, successive_ratios,
)
from .tree_codec import count_trees, decode_word, encode_tree, excess_of

__all__ = [
    "Generator", "GapLabel", "ForestDiagram", "GrowthSeries",
    "identity_diagram", "multiply", "reduce", "label_gaps", "weight", "column_weight",
    "diagram_of", "geodesic_length", "parse_word", "canonical_key", "bfs_sphere_counts",
    "classify", "classify_incremental",
    "count_sphere", "count_geodesics", "enumerate_geodesics", "next_geodesic",
    "growth_series", "iter_growth",
    "encode_tree", "decode_word", "excess_of", "count_trees",
    "check_submultiplicative", "fekete_bounds", "successive_ratios", "doubling_estimates",
    "amplitude_fit", "read_bfile", "write_bfile",
]
