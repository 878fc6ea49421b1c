"""Current graphs, circuit logs and derived embeddings."""

from .current_graph import CurrentGraph, format_current_graph, parse_current_graph, read_current_graph, trace_circuits
from .derive import attach_vortices, derive, derive_with_vortices, vortex_faces
from .logs import CircuitLog, format_log, parse_log, read_log
from .principles import check_index1, check_index3

__all__ = [
    "CircuitLog",
    "CurrentGraph",
    "attach_vortices",
    "check_index1",
    "check_index3",
    "derive",
    "derive_with_vortices",
    "format_current_graph",
    "format_log",
    "parse_current_graph",
    "parse_log",
    "read_current_graph",
    "read_log",
    "trace_circuits",
    "vortex_faces",
]
