"""Facial covers and cotriangular patchworks."""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..embedding.faces import FaceSet
from ..errors import CoverError


@dataclass(frozen=True)
class CoverVerdict:
    ok: bool
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _checked(fs: FaceSet, subset: Iterable[int]) -> List[int]:
    chosen = list(subset)
    if len(set(chosen)) != len(chosen):
        raise CoverError(f"face listed twice in cover {chosen}")
    for k in chosen:
        if k < 0 or k >= fs.f:
            raise CoverError(f"face index {k} out of range (0..{fs.f - 1})")
    return chosen


def _incidences(fs: FaceSet, chosen: Sequence[int]) -> Counter:
    counts: Counter = Counter()
    for k in chosen:
        counts.update(fs.faces[k].vertices)
    return counts


def _all_vertices(fs: FaceSet) -> List[str]:
    seen = []
    for face in fs.faces:
        for v in face.vertices:
            if v not in seen:
                seen.append(v)
    return seen


def is_facial_cover(fs: FaceSet, subset: Iterable[int]) -> CoverVerdict:
    chosen = _checked(fs, subset)
    counts = _incidences(fs, chosen)
    for v in _all_vertices(fs):
        if counts[v] == 0:
            return CoverVerdict(False, f"vertex {v} is on no cover face")
    return CoverVerdict(True)


def is_patchwork(fs: FaceSet, subset: Iterable[int]) -> CoverVerdict:
    """Every vertex on exactly one cover corner, every other face a triangle"""
    chosen = _checked(fs, subset)
    counts = _incidences(fs, chosen)
    for v in _all_vertices(fs):
        if counts[v] == 0:
            return CoverVerdict(False, f"vertex {v} is on no cover face")
        if counts[v] > 1:
            return CoverVerdict(False, f"vertex {v} has {counts[v]} incidences with cover faces")
    for k, face in enumerate(fs.faces):
        if k not in chosen and face.sides != 3:
            return CoverVerdict(False, f"face {face} outside the cover is not a triangle")
    return CoverVerdict(True)


def iter_patchworks(fs: FaceSet, shape: Optional[Sequence[int]] = None) -> Iterator[Tuple[int, ...]]:
    """
    Every cotriangular patchwork, optionally restricted to a multiset of face
    lengths. The nontriangular faces must all belong to the cover.
    """
    forced = fs.nontriangular()
    total = len(_all_vertices(fs))
    if shape is not None and not Counter(fs.faces[k].sides for k in forced) <= Counter(shape):
        return
    if shape is not None and sum(shape) != total:
        return
    free = [k for k in range(fs.f) if k not in forced]
    # cover sides add up to the vertex count, so free triangles are limited
    room = (total - sum(fs.faces[k].sides for k in forced)) // 3
    sizes = [len(shape) - len(forced)] if shape is not None else range(0, min(room, len(free)) + 1)
    for extra in sizes:
        if extra < 0:
            continue
        for picked in combinations(free, extra):
            chosen = tuple(sorted(forced + list(picked)))
            if shape is not None and sorted(fs.faces[k].sides for k in chosen) != sorted(shape):
                continue
            if is_patchwork(fs, chosen):
                yield chosen


def iter_covers(fs: FaceSet, h: int) -> Iterator[Tuple[int, ...]]:
    """Every facial cover made of exactly h faces"""
    for chosen in combinations(range(fs.f), h):
        if is_facial_cover(fs, chosen):
            yield chosen


def faces_by_labels(fs: FaceSet, cycles: Iterable[Sequence[str]]) -> List[int]:
    """Resolve faces written as corner sequences (any starting corner)"""
    wanted = []
    for cycle in cycles:
        cycle = tuple(cycle)
        rotations = {cycle[i:] + cycle[:i] for i in range(len(cycle))}
        hits = [k for k, face in enumerate(fs.faces) if face.vertices in rotations]
        if not hits:
            raise CoverError(f"no face with corners {list(cycle)}")
        if len(hits) > 1:
            raise CoverError(f"corners {list(cycle)} match {len(hits)} faces")
        wanted.append(hits[0])
    return wanted
