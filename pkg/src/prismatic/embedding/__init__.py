"""Rotation systems, face tracing and surgery."""

from .emb_format import normalize, parse_embedding, read_embedding, serialize_embedding, write_embedding
from .faces import FaceSet, FaceWalk, euler_genus, trace_faces
from .rotation import RotationSystem, vertex_sort_key
from .surgery import (
    add_edge_across_faces,
    add_edge_in_face,
    contract_edge,
    delete_edge,
    delete_vertex,
    flip_edge,
    mirror,
    resolve_face,
    split_vertex,
    subdivide_face,
)

__all__ = [
    "FaceSet",
    "FaceWalk",
    "RotationSystem",
    "add_edge_across_faces",
    "add_edge_in_face",
    "contract_edge",
    "delete_edge",
    "delete_vertex",
    "euler_genus",
    "flip_edge",
    "mirror",
    "normalize",
    "parse_embedding",
    "read_embedding",
    "resolve_face",
    "serialize_embedding",
    "split_vertex",
    "subdivide_face",
    "trace_faces",
    "vertex_sort_key",
    "write_embedding",
]
