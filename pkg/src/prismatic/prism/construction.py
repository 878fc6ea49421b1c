"""
Mirror-and-tube construction of K_n x K_2 embeddings.

Side 0 is the given embedding of K_n, side 1 its mirror image with every
label primed. For each cover face a tube joins the face to its mirror and
carries the matching edges (v, v') of the face's corners.
"""

import logging
from typing import Dict, Iterable, List, Tuple

from ..embedding.faces import trace_faces
from ..embedding.rotation import RotationSystem
from ..errors import CoverError, InvalidEmbeddingError
from .covers import is_facial_cover

logger = logging.getLogger(__name__)

PRIME = "'"


def prime(label: str) -> str:
    return label + PRIME


def unprime(label: str) -> str:
    return label[:-1] if label.endswith(PRIME) else label


def side_of(label: str) -> int:
    return 1 if label.endswith(PRIME) else 0


def build_prism(rs: RotationSystem, cover: Iterable[int]) -> RotationSystem:
    """
    Embed K_n x K_2 in the surface of genus 2g + h - 1, where g is the genus
    of rs and h the number of cover faces. A vertex met again on a later
    cover face (or twice on one face) keeps its first matching edge.
    """
    if not rs.is_complete():
        raise InvalidEmbeddingError("build_prism needs an embedding of a complete graph")
    if any(side_of(v) for v in rs.vertices):
        raise InvalidEmbeddingError("base labels must not end with a prime")
    fs = trace_faces(rs)
    chosen = sorted(cover)
    verdict = is_facial_cover(fs, chosen)
    if not verdict:
        raise CoverError(f"not a facial cover: {verdict.witness}")

    offset = rs.num_darts
    edges: List[Tuple[str, str]] = list(rs.edges) + [(prime(a), prime(b)) for a, b in rs.edges]
    rot: Dict[str, List[int]] = {v: list(r) for v, r in zip(rs.vertices, rs.rotations)}
    for v, r in zip(rs.vertices, rs.rotations):
        rot[prime(v)] = [d + offset for d in reversed(r)]

    matched = set()
    for k in chosen:
        face = fs.faces[k]
        added = 0
        for t, v in enumerate(face.vertices):
            if v in matched:
                continue
            matched.add(v)
            e = len(edges)
            edges.append((v, prime(v)))
            row = rot[v]
            row.insert(row.index(face.corner_anchor(t)) + 1, 2 * e)
            row = rot[prime(v)]
            row.insert(row.index(face.arcs[t] + offset) + 1, 2 * e + 1)
            added += 1
        if not added:
            raise CoverError(f"cover face {face} would carry no matching edge")

    prism = RotationSystem.from_parts(edges, rot)
    genus = trace_faces(prism).genus
    assert genus == 2 * fs.genus + len(chosen) - 1, f"tube construction gave genus {genus}"
    logger.info("built K_%d x K_2 of genus %d from %d cover face(s)", rs.num_vertices, genus, len(chosen))
    return prism


def matching_edges(rs: RotationSystem) -> List[int]:
    return [e for e, (a, b) in enumerate(rs.edges) if side_of(a) != side_of(b)]
