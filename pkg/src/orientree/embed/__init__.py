"""Embedding routines: exhaustive search, DAG kernels, partitions, gluing, and full pipelines."""

from .base import BoundViolation, Embedder, embedding_violations, is_embedding
from .bruteforce import brute_force_embed
from .dag import embed_tree_in_dag, gallai_roy_path
from .gluing import glue_directed_path, glue_leaves_fallback, glue_oriented_path
from .partition import Partition3, directed_partition, oriented_partition
from .pipelines import embed_arborescence, embed_bblock_path, embed_oriented_tree

__all__ = [
    "BoundViolation",
    "Embedder",
    "Partition3",
    "brute_force_embed",
    "directed_partition",
    "embed_arborescence",
    "embed_bblock_path",
    "embed_oriented_tree",
    "embed_tree_in_dag",
    "embedding_violations",
    "gallai_roy_path",
    "glue_directed_path",
    "glue_leaves_fallback",
    "glue_oriented_path",
    "is_embedding",
    "oriented_partition",
]
