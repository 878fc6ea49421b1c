"""Prism graphs K_n x K_2: genus formulas, covers, construction and slicing."""

from .construction import build_prism, matching_edges, prime, side_of, unprime
from .covers import CoverVerdict, faces_by_labels, is_facial_cover, is_patchwork, iter_covers, iter_patchworks
from .formula import genus_formula, genus_table, lower_bound, ringel_single_handle_genus, snug_face_count, snug_genus
from .snug import SliceResult, check_snug, prism_order, slice_prism
from .split_complete import attach_uv, delete_uv, split_complete_check

__all__ = [
    "CoverVerdict",
    "SliceResult",
    "attach_uv",
    "build_prism",
    "check_snug",
    "delete_uv",
    "faces_by_labels",
    "genus_formula",
    "genus_table",
    "is_facial_cover",
    "is_patchwork",
    "iter_covers",
    "iter_patchworks",
    "lower_bound",
    "matching_edges",
    "prime",
    "prism_order",
    "ringel_single_handle_genus",
    "side_of",
    "slice_prism",
    "snug_face_count",
    "snug_genus",
    "split_complete_check",
    "unprime",
]
