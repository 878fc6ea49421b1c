"""
Surgery primitives on rotation systems.

Every operation returns a new RotationSystem. Insertions append edges, so
arc ids of the input stay valid on the output; deletions compact ids.
"""

import logging
from typing import Dict, List, Optional, Tuple, Union

from ..errors import DisconnectionError, SurgeryError
from .faces import FaceWalk, trace_faces
from .rotation import RotationSystem, check_label

logger = logging.getLogger(__name__)

FaceRef = Union[int, FaceWalk]


class RotationBuilder:
    """Mutable working copy used while an operation rewires darts"""

    def __init__(self, rs: RotationSystem):
        self.edges: List[Optional[List[str]]] = [list(edge) for edge in rs.edges]
        self.rot: Dict[str, List[int]] = {v: list(r) for v, r in zip(rs.vertices, rs.rotations)}

    def insert_after(self, v: str, anchor: int, d: int) -> None:
        row = self.rot[v]
        row.insert(row.index(anchor) + 1, d)

    def add_edge(self, a: str, b: str) -> int:
        self.edges.append([a, b])
        return len(self.edges) - 1

    def detach(self, d: int) -> None:
        """Take dart d out of its tail rotation (the edge slot stays)"""
        edge = self.edges[d >> 1]
        self.rot[edge[d & 1]].remove(d)

    def remove_edge(self, e: int) -> None:
        self.detach(2 * e)
        self.detach(2 * e + 1)
        self.edges[e] = None

    def remove_vertex(self, v: str) -> None:
        for d in list(self.rot[v]):
            if self.edges[d >> 1] is not None:
                self.remove_edge(d >> 1)
        del self.rot[v]

    def build(self) -> RotationSystem:
        remap: Dict[int, int] = {}
        edges: List[Tuple[str, str]] = []
        for e, edge in enumerate(self.edges):
            if edge is not None:
                remap[e] = len(edges)
                edges.append((edge[0], edge[1]))
        rotations = {v: [2 * remap[d >> 1] + (d & 1) for d in row] for v, row in self.rot.items()}
        return RotationSystem.from_parts(edges, rotations)


def resolve_face(rs: RotationSystem, face: FaceRef) -> FaceWalk:
    """Accept a canonical face index or a FaceWalk and check it is a face of rs"""
    if isinstance(face, int):
        faces = trace_faces(rs).faces
        if face < 0 or face >= len(faces):
            raise SurgeryError(f"face index {face} out of range (0..{len(faces) - 1})")
        return faces[face]
    arcs = face.arcs
    for t, d in enumerate(arcs):
        if d >= rs.num_darts or rs.face_successor(d) != arcs[(t + 1) % len(arcs)]:
            raise SurgeryError(f"{face} is not a face of this embedding")
    return face


def _check_corner(face: FaceWalk, i: int) -> None:
    if not face.arcs:
        raise SurgeryError(f"face {face} has no sides")
    if i < 0 or i >= face.sides:
        raise SurgeryError(f"corner {i} is not on face {face} ({face.sides} corners)")


def _fresh_label(rs: RotationSystem, label: str) -> str:
    check_label(label)
    if rs.has_vertex(label):
        raise SurgeryError(f"vertex label {label} already in use")
    return label


def _require_connected(rs: RotationSystem, what: str) -> RotationSystem:
    if not rs.is_connected():
        raise DisconnectionError(f"{what} disconnects the graph")
    return rs


def mirror(rs: RotationSystem) -> RotationSystem:
    """Reverse every rotation; faces become the reversed walks"""
    return RotationSystem(rs.vertices, rs.edges, tuple(tuple(reversed(r)) for r in rs.rotations))


def delete_vertex(rs: RotationSystem, v: str) -> RotationSystem:
    if not rs.has_vertex(v):
        raise SurgeryError(f"unknown vertex {v}")
    if rs.num_vertices == 1:
        raise SurgeryError("cannot delete the only vertex")
    b = RotationBuilder(rs)
    b.remove_vertex(v)
    return _require_connected(b.build(), f"deleting vertex {v}")


def delete_edge(rs: RotationSystem, e: int) -> RotationSystem:
    if e < 0 or e >= rs.num_edges:
        raise SurgeryError(f"unknown edge {e}")
    b = RotationBuilder(rs)
    b.remove_edge(e)
    a, c = rs.edges[e]
    return _require_connected(b.build(), f"deleting edge {a}-{c}")


def flip_edge(rs: RotationSystem, e: int) -> RotationSystem:
    """
    Replace the diagonal (a, b) of the quadrilateral formed by the triangles
    [a, b, c] and [b, a, d] with (c, d). The edge keeps its index.
    """
    if e < 0 or e >= rs.num_edges:
        raise SurgeryError(f"unknown edge {e}")
    fs = trace_faces(rs)
    t1, t2 = fs.face_containing(2 * e), fs.face_containing(2 * e + 1)
    if fs.face_of_arc(2 * e) == fs.face_of_arc(2 * e + 1):
        raise SurgeryError(f"edge {rs.edges[e]} has both sides on the same face")
    if not (t1.is_triangle() and t2.is_triangle()):
        raise SurgeryError(f"edge {rs.edges[e]} does not lie on two triangles")
    _, f1, _ = t1.rotated_to(2 * e)
    _, g1, _ = t2.rotated_to(2 * e + 1)
    c, d = rs.head(f1), rs.head(g1)
    if c == d:
        raise SurgeryError(f"flipping {rs.edges[e]} would create a loop at {c}")

    b = RotationBuilder(rs)
    b.detach(2 * e)
    b.detach(2 * e + 1)
    b.edges[e] = [c, d]
    b.insert_after(c, f1 ^ 1, 2 * e)
    b.insert_after(d, g1 ^ 1, 2 * e + 1)
    return b.build()


def _insert_chord(rs: RotationSystem, f1: FaceWalk, i: int, f2: FaceWalk, j: int) -> RotationSystem:
    vi, vj = f1.vertices[i], f2.vertices[j]
    b = RotationBuilder(rs)
    e = b.add_edge(vi, vj)
    b.insert_after(vi, f1.corner_anchor(i), 2 * e)
    b.insert_after(vj, f2.corner_anchor(j), 2 * e + 1)
    return b.build()


def add_edge_in_face(rs: RotationSystem, face: FaceRef, corner1: int, corner2: int) -> RotationSystem:
    """Chord between two corners of one face; the face splits in two"""
    walk = resolve_face(rs, face)
    _check_corner(walk, corner1)
    _check_corner(walk, corner2)
    if corner1 == corner2:
        raise SurgeryError("a chord needs two distinct corners")
    return _insert_chord(rs, walk, corner1, walk, corner2)


def add_edge_across_faces(rs: RotationSystem, face1: FaceRef, corner1: int, face2: FaceRef, corner2: int) -> RotationSystem:
    """Handle edge joining corners of two distinct faces; genus goes up by one"""
    w1, w2 = resolve_face(rs, face1), resolve_face(rs, face2)
    _check_corner(w1, corner1)
    _check_corner(w2, corner2)
    if w1.arcs[0] in w2.arcs:
        raise SurgeryError("both corners lie on the same face")
    return _insert_chord(rs, w1, corner1, w2, corner2)


def subdivide_face(rs: RotationSystem, face: FaceRef, name: str) -> RotationSystem:
    """Put a new vertex inside the face and join it to every corner"""
    walk = resolve_face(rs, face)
    _fresh_label(rs, name)
    if not walk.arcs:
        raise SurgeryError(f"face {walk} has no sides")
    b = RotationBuilder(rs)
    spokes = []
    for t, v in enumerate(walk.vertices):
        e = b.add_edge(v, name)
        b.insert_after(v, walk.corner_anchor(t), 2 * e)
        spokes.append(2 * e + 1)
    b.rot[name] = list(reversed(spokes))
    return b.build()


def contract_edge(rs: RotationSystem, e: int) -> RotationSystem:
    """Merge the endpoints of e into its tail; rotations splice at e's arc-ends"""
    if e < 0 or e >= rs.num_edges:
        raise SurgeryError(f"unknown edge {e}")
    if rs.is_loop(e):
        raise SurgeryError(f"cannot contract loop at {rs.edges[e][0]}")
    a, c = rs.edges[e]
    rot_a, rot_c = list(rs.rotation(a)), list(rs.rotation(c))
    ia, ic = rot_a.index(2 * e), rot_c.index(2 * e + 1)
    merged = rot_a[ia + 1:] + rot_a[:ia] + rot_c[ic + 1:] + rot_c[:ic]

    b = RotationBuilder(rs)
    for d in rot_c:
        b.edges[d >> 1][d & 1] = a
    b.edges[e] = None
    del b.rot[c]
    b.rot[a] = merged
    return b.build()


def split_vertex(
    rs: RotationSystem,
    w: str,
    hex_face: FaceRef,
    u: str = "u",
    v: str = "v",
) -> RotationSystem:
    """
    Replace w, which occurs twice on the only nontriangular face
    [w, a, b, w, c, d], by two vertices u and v: u takes the arcs of w from
    (w, a) to (w, b), v the arcs from (w, c) to (w, d). The temporary edge
    (u, v) borders one octagon and is deleted, which leaves the triangles
    [u, a, b] and [v, c, d] and lowers the genus by one.
    """
    if not rs.has_vertex(w):
        raise SurgeryError(f"unknown vertex {w}")
    fs = trace_faces(rs)
    walk = resolve_face(rs, hex_face)
    others = [fs.faces[i] for i in fs.nontriangular() if fs.faces[i] != walk]
    if walk.sides == 3 or others:
        raise SurgeryError("split_vertex needs exactly one nontriangular face")
    if walk.sides != 6:
        raise SurgeryError(f"face {walk} is not hexagonal")
    at_w = walk.corners_at(w)
    if len(at_w) < 2:
        raise SurgeryError(f"vertex {w} does not occur twice on {walk}")
    if len(at_w) != 2 or (at_w[1] - at_w[0]) != 3:
        raise SurgeryError(f"face {walk} is not of the form [w, a, b, w, c, d]")
    arcs = walk.rotated_to(walk.arcs[at_w[0]])
    ring = [rs.tail(d) for d in arcs]
    if len(set(ring[1:3] + ring[4:6])) != 4 or w in ring[1:3] + ring[4:6]:
        raise SurgeryError(f"face {walk} is not of the form [w, a, b, w, c, d] with a, b, c, d distinct")
    for label in (u, v):
        check_label(label)
        if rs.has_vertex(label) and label != w:
            raise SurgeryError(f"vertex label {label} already in use")
    if u == v:
        raise SurgeryError("the two new vertices need distinct labels")

    rot = list(rs.rotation(w))
    start = rot.index(arcs[0])
    rot = rot[start:] + rot[:start]
    cut = rot.index(arcs[2] ^ 1) + 1
    side_u, side_v = rot[:cut], rot[cut:]
    assert side_v and side_v[0] == arcs[3] and side_v[-1] == arcs[5] ^ 1

    b = RotationBuilder(rs)
    for d in side_u:
        b.edges[d >> 1][d & 1] = u
    for d in side_v:
        b.edges[d >> 1][d & 1] = v
    del b.rot[w]
    h = b.add_edge(u, v)
    b.rot[u] = [2 * h] + side_u
    b.rot[v] = [2 * h + 1] + side_v
    intermediate = b.build()

    mid = trace_faces(intermediate)
    h = intermediate.num_edges - 1
    assert mid.face_of_arc(2 * h) == mid.face_of_arc(2 * h + 1)
    assert mid.faces[mid.face_of_arc(2 * h)].sides == 8
    logger.debug("split %s into %s/%s, octagon %s", w, u, v, mid.faces[mid.face_of_arc(2 * h)])

    result = delete_edge(intermediate, h)
    assert trace_faces(result).is_triangular()
    return result
