"""Snugness of prism embeddings and slicing them back into two K_n embeddings."""

import logging
from dataclasses import dataclass
from typing import Sequence, Set, Tuple

from ..embedding.faces import FaceSet, trace_faces
from ..embedding.rotation import RotationSystem
from ..embedding.surgery import RotationBuilder, mirror
from ..errors import NotPrismError, NotSnugError
from ..models import SnugReport
from .construction import matching_edges, prime, side_of, unprime
from .covers import is_patchwork
from .formula import snug_face_count

logger = logging.getLogger(__name__)


def prism_order(rs: RotationSystem) -> int:
    """n for an embedding of K_n x K_2 with labels b and b'; NotPrismError otherwise"""
    base = [v for v in rs.vertices if side_of(v) == 0]
    top = {v for v in rs.vertices if side_of(v) == 1}
    n = len(base)
    if n < 2 or top != {prime(v) for v in base}:
        raise NotPrismError("vertices do not come in pairs b, b'")
    if not rs.is_simple():
        raise NotPrismError("a prism graph is simple")
    expected = n * (n - 1) + n
    if rs.num_edges != expected:
        raise NotPrismError(f"expected {expected} edges for K_{n} x K_2, found {rs.num_edges}")
    for a, b in rs.edges:
        if side_of(a) != side_of(b) and unprime(a) != unprime(b):
            raise NotPrismError(f"edge ({a}, {b}) joins the two sides but is not a matching edge")
    return n


def _cycle_key(seq: Sequence[str]) -> Tuple[str, ...]:
    seq = tuple(seq)
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def _consecutive(face_arcs: Sequence[int], marked: Set[int]) -> bool:
    k = len(face_arcs)
    return any(face_arcs[i] in marked and face_arcs[(i + 1) % k] in marked for i in range(k))


def check_snug(rs: RotationSystem) -> SnugReport:
    """
    Snug: every face meeting a matching edge is a quadrilateral and every
    other face is a triangle.
    """
    n = prism_order(rs)
    fs = trace_faces(rs)
    marked = {d for e in matching_edges(rs) for d in (2 * e, 2 * e + 1)}

    matching_faces = []
    witness = None
    incidences_ok = True
    nonconsecutive_ok = True
    for face in fs.faces:
        hits = sum(1 for d in face.arcs if d in marked)
        if hits:
            matching_faces.append(str(face))
            incidences_ok &= hits >= 2
            nonconsecutive_ok &= not _consecutive(face.arcs, marked)
            if face.sides != 4 and witness is None:
                witness = f"face {face} meets a matching edge but has {face.sides} sides"
        elif face.sides != 3 and witness is None:
            witness = f"face {face} has {face.sides} sides and no matching edge"

    report = SnugReport(
        snug=witness is None,
        n=n,
        genus=fs.genus,
        faces=fs.f,
        matching_edges=len(marked) // 2,
        matching_faces=matching_faces,
        witness=witness,
        matching_incidences_ok=incidences_ok,
        nonconsecutive_ok=nonconsecutive_ok,
    )
    if report.snug:
        assert 6 * fs.genus == (n - 2) * (n - 3), f"snug embedding of genus {fs.genus} for n={n}"
        assert fs.f == snug_face_count(n)
        report.expected_genus = fs.genus
        report.expected_faces = fs.f
    return report


@dataclass(frozen=True)
class SliceResult:
    side0: RotationSystem
    patchwork0: Tuple[int, ...]
    side1: RotationSystem
    patchwork1: Tuple[int, ...]
    prism_genus: int

    @property
    def h(self) -> int:
        return len(self.patchwork0)


def _side(rs: RotationSystem, keep: int) -> RotationSystem:
    b = RotationBuilder(rs)
    for e, (a, c) in enumerate(rs.edges):
        if side_of(a) != keep or side_of(c) != keep:
            if b.edges[e] is not None:
                b.remove_edge(e)
    for v in rs.vertices:
        if side_of(v) != keep:
            del b.rot[v]
    return b.build()


def _punctured(fs: FaceSet, prism_faces: Set[Tuple[str, ...]]) -> Tuple[int, ...]:
    return tuple(k for k, face in enumerate(fs.faces) if _cycle_key(face.vertices) not in prism_faces)


def slice_prism(rs: RotationSystem) -> SliceResult:
    """
    Cut a snug prism along its matching edges. Side 1 is mirrored back and
    unprimed so both sides compare directly with the source embedding; the
    faces created by the cut form a cotriangular patchwork on each side.
    """
    report = check_snug(rs)
    if not report.snug:
        raise NotSnugError(f"cannot slice a non-snug prism: {report.witness}")
    prism_fs = trace_faces(rs)

    side0 = _side(rs, 0)
    known0 = {_cycle_key(face.vertices) for face in prism_fs.faces if all(side_of(v) == 0 for v in face.vertices)}
    side1 = mirror(_side(rs, 1)).relabel({v: unprime(v) for v in rs.vertices if side_of(v) == 1})
    # side-1 faces come back reversed once the rotations are mirrored
    known1 = set()
    for face in prism_fs.faces:
        if all(side_of(v) == 1 for v in face.vertices):
            labels = [unprime(v) for v in face.vertices]
            known1.add(_cycle_key(labels[:1] + labels[:0:-1]))

    fs0, fs1 = trace_faces(side0), trace_faces(side1)
    patch0, patch1 = _punctured(fs0, known0), _punctured(fs1, known1)
    for fs, patch in ((fs0, patch0), (fs1, patch1)):
        verdict = is_patchwork(fs, patch)
        assert verdict, f"sliced side is not a cotriangular patchwork: {verdict.witness}"
    assert len(patch0) == len(patch1)
    assert prism_fs.genus == fs0.genus + fs1.genus + len(patch0) - 1
    logger.info("sliced genus-%d prism into genera %d and %d, h=%d", prism_fs.genus, fs0.genus, fs1.genus, len(patch0))
    return SliceResult(side0, patch0, side1, patch1, prism_fs.genus)
