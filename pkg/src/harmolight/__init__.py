"""Harmonic (mod-2 Laplacian) evolution of finite simple graphs."""

from .analysis import Structure, analyze, analyze_matrix, verify
from .dynamics import brute_digraph, evolve, export_dot, rule_step
from .estimator import HarmonicEvolution
from .gf2 import BitMatrix, BitVector, kernel_dim, mat_mul, mat_pow, mat_vec, rank
from .graphs import Graph, boundary, coboundary, graph_from_harmonic, harmonic_matrix, parse_graph
from .loops import LoopEnsemble, funny_div, loop_ensemble, loop_product, moebius, q_hat
from .monoid import MonoidProfile, decompose, monoid_profile, projection
from .ops import disjoint_union, power_graph, power_prediction, union_prediction
from .survey import admissibility, enumerate_graphs, run_survey
from .trees import TreeFactorization, kernel_filtration, tree_factorization, tree_product

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "Graph",
    "HarmonicEvolution",
    "LoopEnsemble",
    "MonoidProfile",
    "Structure",
    "TreeFactorization",
    "admissibility",
    "analyze",
    "analyze_matrix",
    "boundary",
    "brute_digraph",
    "coboundary",
    "decompose",
    "disjoint_union",
    "enumerate_graphs",
    "evolve",
    "export_dot",
    "funny_div",
    "graph_from_harmonic",
    "harmonic_matrix",
    "kernel_dim",
    "kernel_filtration",
    "loop_ensemble",
    "loop_product",
    "mat_mul",
    "mat_pow",
    "mat_vec",
    "moebius",
    "monoid_profile",
    "parse_graph",
    "power_graph",
    "power_prediction",
    "projection",
    "q_hat",
    "rank",
    "rule_step",
    "run_survey",
    "tree_factorization",
    "tree_product",
    "union_prediction",
    "verify",
]
