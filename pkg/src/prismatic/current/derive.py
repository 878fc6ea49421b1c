"""Derived embeddings of circuit logs, and vortex subdivision."""

import logging
from typing import Dict, List

from ..embedding.faces import trace_faces
from ..embedding.rotation import RotationSystem
from ..embedding.surgery import subdivide_face
from ..errors import CurrentGraphError
from .logs import CircuitLog

logger = logging.getLogger(__name__)


def derive(log: CircuitLog) -> RotationSystem:
    """
    Rotation at vertex v of Z_m is the log of circuit [v mod index] with v
    added to every current; vortex letters are skipped.
    """
    m, j = log.modulus, log.index
    rotations: Dict[str, List[str]] = {}
    for v in range(m):
        rotations[str(v)] = [str((v + c) % m) for c in log.currents(v % j)]
    for v, row in rotations.items():
        if v in row:
            raise CurrentGraphError(f"derived rotation at {v} contains a loop")
    try:
        return RotationSystem.from_neighbor_rotations(rotations)
    except ValueError as exc:
        raise CurrentGraphError(f"log does not derive a valid rotation system: {exc}") from exc


def _dart(rs: RotationSystem, a: str, b: str) -> int:
    edges = rs.edges_between(a, b)
    if len(edges) != 1:
        raise CurrentGraphError(f"ambiguous vortex corner: {len(edges)} edges between {a} and {b}")
    e = edges[0]
    return 2 * e if rs.tail(2 * e) == a else 2 * e + 1


def vortex_faces(rs: RotationSystem, log: CircuitLog) -> Dict[str, int]:
    """
    Match each vortex letter to the Hamiltonian face carrying its corners.

    A letter between currents c1 and c2 in circuit [i] sits, at every vertex
    v = i (mod index), in the corner between (v, v + c1) and (v, v + c2); that
    corner lies on the face that leaves v along (v, v + c2).
    """
    m, j = log.modulus, log.index
    fs = trace_faces(rs)
    hamiltonian = [k for k, face in enumerate(fs.faces) if face.sides == m and len(face.vertex_set()) == m]
    letters = log.letters()
    if len(hamiltonian) != len(letters):
        raise CurrentGraphError(
            f"{len(letters)} vortex letter(s) but {len(hamiltonian)} Hamiltonian face(s) in the derived embedding"
        )

    matched: Dict[str, int] = {}
    for letter in letters:
        found = set()
        for i, pos in log.occurrences(letter):
            _, after = log.neighbors_of(i, pos)
            for v in range(i, m, j):
                found.add(fs.face_of_arc(_dart(rs, str(v), str((v + after) % m))))
        if len(found) != 1:
            raise CurrentGraphError(f"vortex {letter} touches {len(found)} different faces")
        k = found.pop()
        if k not in hamiltonian:
            raise CurrentGraphError(f"vortex {letter} lands on non-Hamiltonian face {fs.faces[k]}")
        if k in matched.values():
            raise CurrentGraphError(f"vortex {letter} shares its face with another letter")
        matched[letter] = k
    return matched


def attach_vortices(rs: RotationSystem, log: CircuitLog) -> RotationSystem:
    """Subdivide each Hamiltonian face with a vertex named after its letter"""
    fs = trace_faces(rs)
    matched = vortex_faces(rs, log)
    # arc ids survive subdivision, so each face is found again by its first arc
    anchors = {letter: fs.faces[k].arcs[0] for letter, k in matched.items()}
    for letter in log.letters():
        current = trace_faces(rs)
        rs = subdivide_face(rs, current.face_containing(anchors[letter]), letter)
        logger.debug("subdivided face of vortex %s", letter)
    return rs


def derive_with_vortices(log: CircuitLog) -> RotationSystem:
    return attach_vortices(derive(log), log)
