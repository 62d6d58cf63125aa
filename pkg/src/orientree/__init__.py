"""Oriented trees in digraphs of large chromatic number: constructive embeddings, bounds and checks."""

from .bounds import BoundSpec, evaluate_bound
from .digraph import Colouring, Digraph, chromatic_number, optimal_colouring
from .formats import FormatError, dump_digraph, dump_tree, parse_digraph, parse_tree
from .trees import OrientedTree, RootedOrientedPath, enumerate_oriented_trees

__all__ = [
    "BoundSpec",
    "Colouring",
    "Digraph",
    "FormatError",
    "OrientedTree",
    "RootedOrientedPath",
    "chromatic_number",
    "dump_digraph",
    "dump_tree",
    "enumerate_oriented_trees",
    "evaluate_bound",
    "optimal_colouring",
    "parse_digraph",
    "parse_tree",
]
__version__ = "0.1.0"
