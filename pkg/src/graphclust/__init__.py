"""Generalized clustering coefficients C(3), C(4), C(5) from exact subgraph counts."""

from .census import MotifCounts, census3, census4, census5, full_census
from .cliques import CliqueReport, maximal_cliques
from .clustering import ClusteringReport, c3, c4, c5, c_general, expected_c_gnp
from .errors import (
    CountOverflowError,
    EdgeListParseError,
    GraphClustError,
    ResourceLimitError,
    SamplingError,
    UndefinedCoefficientError,
    ValidationError,
)
from .generators import chain_clique, gnp, gnp_connected, named_family
from .graph import Graph, WalkStats, density, from_edge_list, read_edge_list, walk_stats

__all__ = [
    "CliqueReport", "ClusteringReport", "CountOverflowError", "EdgeListParseError",
    "Graph", "GraphClustError", "MotifCounts", "ResourceLimitError", "SamplingError",
    "UndefinedCoefficientError", "ValidationError", "WalkStats", "c3", "c4", "c5",
    "c_general", "census3", "census4", "census5", "chain_clique", "density",
    "expected_c_gnp", "from_edge_list", "full_census", "gnp", "gnp_connected",
    "maximal_cliques", "named_family", "read_edge_list", "walk_stats",
]
