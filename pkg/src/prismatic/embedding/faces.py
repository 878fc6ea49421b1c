"""Face tracing and Euler bookkeeping."""

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Tuple

from .rotation import RotationSystem


@dataclass(frozen=True)
class FaceWalk:
    """
    A closed boundary walk, stored starting at its least arc.

    ``vertices[i]`` is corner ``i``: the tail of ``arcs[i]``, sitting in the
    rotation gap between ``arcs[i - 1] ^ 1`` and ``arcs[i]``. A face of a
    lone vertex has no arcs and a single corner.
    """

    arcs: Tuple[int, ...]
    vertices: Tuple[str, ...]

    @property
    def sides(self) -> int:
        return len(self.arcs)

    def corner_anchor(self, i: int) -> int:
        """The dart after which a new arc is inserted to land in corner i"""
        return self.arcs[i - 1] ^ 1

    def corners_at(self, v: str) -> List[int]:
        return [i for i, w in enumerate(self.vertices) if w == v]

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def is_triangle(self) -> bool:
        return len(self.arcs) == 3

    def rotated_to(self, arc: int) -> Tuple[int, ...]:
        i = self.arcs.index(arc)
        return self.arcs[i:] + self.arcs[:i]

    def label_cycle(self) -> Tuple[str, ...]:
        """Corner labels starting from the least label (orientation kept)"""
        if not self.vertices:
            return ()
        best = min(range(len(self.vertices)), key=lambda i: self.vertices[i:] + self.vertices[:i])
        return self.vertices[best:] + self.vertices[:best]

    def __str__(self) -> str:
        return "[" + ", ".join(self.vertices) + "]"


@dataclass(frozen=True)
class FaceSet:
    faces: Tuple[FaceWalk, ...]
    v: int
    e: int
    f: int
    genus: int
    _arc_position: Dict[int, Tuple[int, int]] = field(default_factory=dict, repr=False, compare=False)

    def face_of_arc(self, arc: int) -> int:
        """Index of the face traversing ``arc``"""
        return self._arc_position[arc][0]

    def face_containing(self, arc: int) -> FaceWalk:
        return self.faces[self._arc_position[arc][0]]

    @cached_property
    def lengths(self) -> Counter:
        return Counter(face.sides for face in self.faces)

    def face_vector(self) -> Tuple[int, ...]:
        return tuple(sorted(face.sides for face in self.faces))

    def nontriangular(self) -> List[int]:
        return [i for i, face in enumerate(self.faces) if face.sides != 3]

    def is_triangular(self) -> bool:
        return all(face.sides == 3 for face in self.faces)

    @property
    def counts(self) -> Tuple[int, int, int, int]:
        return (self.v, self.e, self.f, self.genus)


def trace_faces(rs: RotationSystem) -> FaceSet:
    """
    Trace every face: arriving along ``d`` the walk continues with the
    successor of ``d ^ 1`` in the rotation at the head of ``d``.
    """
    darts = rs.num_darts
    visited = [False] * darts
    faces: List[FaceWalk] = []
    positions: Dict[int, Tuple[int, int]] = {}
    for start in range(darts):
        if visited[start]:
            continue
        arcs = []
        d = start
        while not visited[d]:
            visited[d] = True
            positions[d] = (len(faces), len(arcs))
            arcs.append(d)
            d = rs.face_successor(d)
        assert d == start, "face successor is not a permutation"
        faces.append(FaceWalk(tuple(arcs), tuple(rs.tail(a) for a in arcs)))
    for v in rs.vertices:
        if not rs.rotation(v):
            faces.append(FaceWalk((), (v,)))

    v, e, f = rs.num_vertices, rs.num_edges, len(faces)
    assert sum(face.sides for face in faces) == 2 * e
    fs = FaceSet(tuple(faces), v, e, f, 0, positions)
    return FaceSet(fs.faces, v, e, f, euler_genus(fs), positions)


def euler_genus(fs: FaceSet) -> int:
    """Genus from v - e + f = 2 - 2g"""
    twice = 2 - fs.v + fs.e - fs.f
    assert twice % 2 == 0, f"odd Euler characteristic (v={fs.v}, e={fs.e}, f={fs.f})"
    return twice // 2
