"""Edge-density bounds for H-free graphs near the chromatic threshold."""

from .bounds import BoundEvaluation, f1, f2, parse_rational, sweep, tradeoff_params, turan_density, verify_claim
from .constructions import build, build_bh_star, build_bh_star_star, build_eg, density_report
from .graph import Graph, GraphError, RolePartition, graph_from_edges, parse_edge_list
from .graph6 import encode_graph6, parse_graph6
from .kernels import BACKEND
from .threshold import ThresholdClass, chromatic_threshold, decomposition_family, is_near_acyclic, is_r_near_acyclic
from .zykov import TwinClassPartition, is_xyr_free, symmetrize, twin_classes, vertex_order, zykov_step

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BoundEvaluation", "Graph", "GraphError", "RolePartition", "ThresholdClass", "TwinClassPartition",
    "build", "build_bh_star", "build_bh_star_star", "build_eg", "chromatic_threshold", "decomposition_family",
    "density_report", "encode_graph6", "f1", "f2", "graph_from_edges", "is_near_acyclic", "is_r_near_acyclic",
    "is_xyr_free", "parse_edge_list", "parse_graph6", "parse_rational", "sweep", "symmetrize", "tradeoff_params",
    "turan_density", "twin_classes", "verify_claim", "vertex_order", "zykov_step",
]
