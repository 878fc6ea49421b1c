"""
Split-complete graphs: a complete graph on the numbered vertices plus two
non-adjacent vertices u and v whose neighborhoods partition the numbered
vertices.
"""

from typing import Sequence, Tuple

from ..embedding.faces import trace_faces
from ..embedding.rotation import RotationSystem
from ..embedding.surgery import delete_vertex, subdivide_face
from ..errors import SplitCompleteError
from .covers import CoverVerdict, is_patchwork


def split_complete_check(rs: RotationSystem, u: str = "u", v: str = "v") -> CoverVerdict:
    if not (rs.has_vertex(u) and rs.has_vertex(v)):
        return CoverVerdict(False, f"special vertices {u} and {v} are not both present")
    if not rs.is_simple():
        return CoverVerdict(False, "graph has loops or parallel edges")
    numbered = [w for w in rs.vertices if w not in (u, v)]
    nu, nv = set(rs.neighbors(u)), set(rs.neighbors(v))
    if v in nu:
        return CoverVerdict(False, f"{u} and {v} are adjacent")
    if nu & nv:
        return CoverVerdict(False, f"{u} and {v} share neighbors {sorted(nu & nv)}")
    if nu | nv != set(numbered):
        missing = sorted(set(numbered) - nu - nv)
        return CoverVerdict(False, f"numbered vertices {missing} are adjacent to neither {u} nor {v}")
    special = {u, v}
    inner = sum(1 for a, b in rs.edges if a not in special and b not in special)
    k = len(numbered)
    if inner != k * (k - 1) // 2:
        return CoverVerdict(False, "numbered vertices do not form a complete graph")
    return CoverVerdict(True)


def delete_uv(rs: RotationSystem, u: str = "u", v: str = "v") -> Tuple[RotationSystem, Tuple[int, ...]]:
    """
    Delete both special vertices of a triangular split-complete embedding.
    Their links become the two faces of a cotriangular patchwork.
    """
    verdict = split_complete_check(rs, u, v)
    if not verdict:
        raise SplitCompleteError(verdict.witness)
    if not trace_faces(rs).is_triangular():
        raise SplitCompleteError("delete_uv needs a triangular embedding")
    # arc ids are compacted by the deletions, so faces are compared by corners
    before = {face.label_cycle() for face in trace_faces(rs).faces}
    reduced = delete_vertex(delete_vertex(rs, u), v)
    fs = trace_faces(reduced)
    patch = tuple(k for k, face in enumerate(fs.faces) if face.label_cycle() not in before)
    verdict = is_patchwork(fs, patch)
    assert verdict and len(patch) == 2, f"deleting {u} and {v} left no 2-face patchwork: {verdict.witness}"
    return reduced, patch


def attach_uv(rs: RotationSystem, patchwork: Sequence[int], u: str = "u", v: str = "v") -> RotationSystem:
    """Subdivide the two faces of a 2-face patchwork with u and v"""
    if len(patchwork) != 2:
        raise SplitCompleteError(f"attach_uv needs a 2-face patchwork, got {len(patchwork)} face(s)")
    fs = trace_faces(rs)
    verdict = is_patchwork(fs, patchwork)
    if not verdict:
        raise SplitCompleteError(f"not a cotriangular patchwork: {verdict.witness}")
    anchor_u, anchor_v = (fs.faces[k].arcs[0] for k in patchwork)
    rs = subdivide_face(rs, fs.face_containing(anchor_u), u)
    return subdivide_face(rs, trace_faces(rs).face_containing(anchor_v), v)
