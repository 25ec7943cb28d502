"""Spectral sparsification of undirected and directed hypergraphs."""
from .core import (
    CodegreeMatrix, DirectedHypergraph, Labeling, Permutation, UndirectedHypergraph,
    codegree, cut_weight, quadratic_form, size, sort_permutation,
)
from .errors import InputError, ParseError, RefusalError, UnboundedError
from .graph import Graph
from .kernels import BACKEND
from .sparsify import SamplingPlan, SparsifyReport, algorithm2, make_plan, sparsify

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CodegreeMatrix", "DirectedHypergraph", "Graph", "InputError",
    "Labeling", "ParseError", "Permutation", "RefusalError", "SamplingPlan",
    "SparsifyReport", "UnboundedError", "UndirectedHypergraph", "algorithm2",
    "codegree", "cut_weight", "make_plan", "quadratic_form", "size",
    "sort_permutation", "sparsify",
]
