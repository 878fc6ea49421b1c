"""Exhaustive search for embeddings of K_n carrying a given patchwork."""

from .backtrack import PrefixResult, RotationSearch
from .checkpoint import Checkpoint, spec_hash
from .face_vectors import Shape, face_vector_candidates, format_vector
from .oracle import brute_force_face_vectors, count_embeddings
from .runner import search_patchworks, split_budget

__all__ = [
    "Checkpoint",
    "PrefixResult",
    "RotationSearch",
    "Shape",
    "brute_force_face_vectors",
    "count_embeddings",
    "face_vector_candidates",
    "format_vector",
    "search_patchworks",
    "spec_hash",
    "split_budget",
]
