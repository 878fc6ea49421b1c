"""
Face-driven backtracking over rotation systems of K_n.

Rotations are built one successor at a time while faces are traced: the
open walk needs ``succ[cur ^ 1]`` and, when that is still free, the search
branches over the unused darts at that vertex. Vertex 1 keeps the ascending
rotation, which removes relabelling symmetry. Closed faces are checked
against the admissible face vectors as soon as they close.
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from ..embedding.faces import trace_faces
from ..embedding.rotation import RotationSystem
from ..errors import SearchError
from ..models import Finding
from ..prism.covers import is_facial_cover, is_patchwork, iter_covers, iter_patchworks
from .face_vectors import FaceVector, Shape

logger = logging.getLogger(__name__)


class _Exhausted(Exception):
    pass


class _Stopped(Exception):
    pass


class PrefixResult(BaseModel):
    """Outcome of the subtree below one prefix"""

    nodes: int = 0
    leaves: int = 0
    pruned: int = 0
    exhausted: bool = False
    stopped: bool = False
    face_vectors: Dict[str, int] = {}
    findings: List[Finding] = []


def vector_key(vector: Sequence[int]) -> str:
    return " ".join(str(k) for k in vector)


class RotationSearch:
    def __init__(
        self,
        n: int,
        genus: int,
        candidates: Sequence[FaceVector],
        shapes: Sequence[Shape] = (),
        audit: bool = False,
        budget: Optional[int] = None,
        max_findings: Optional[int] = None,
    ):
        if n < 3:
            raise SearchError("the search needs n >= 3")
        self.n = n
        self.genus = genus
        self.labels = [str(i + 1) for i in range(n)]
        self.edges: List[Tuple[int, int]] = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.darts = 2 * len(self.edges)
        self.tail = [0] * self.darts
        self.head = [0] * self.darts
        self.out: List[List[int]] = [[] for _ in range(n)]
        for e, (i, j) in enumerate(self.edges):
            self.tail[2 * e], self.head[2 * e] = i, j
            self.tail[2 * e + 1], self.head[2 * e + 1] = j, i
        for d in range(self.darts):
            self.out[self.tail[d]].append(d)
        for row in self.out:
            row.sort(key=lambda d: self.head[d])

        self.candidates = [tuple(v) for v in candidates]
        self.candidate_set = set(self.candidates)
        self.candidate_counts = [Counter(v) for v in self.candidates]
        self.face_count = len(self.candidates[0]) if self.candidates else 0
        self.max_len = max((max(v) for v in self.candidates), default=0)
        self.shapes = list(shapes)
        self.audit = audit
        self.budget = budget
        self.max_findings = max_findings

        self.succ = [-1] * self.darts
        self.has_pred = [False] * self.darts
        self.in_face = [False] * self.darts
        self.traced = 0
        self.closed: Counter = Counter()
        self.closed_count = 0
        self.path: List[int] = []

        self.prefix: Sequence[int] = ()
        self.split_depth: Optional[int] = None
        self.collected: List[Tuple[int, ...]] = []
        self.result = PrefixResult()

        first = self.out[0]
        for k, d in enumerate(first):
            self._link(d, first[(k + 1) % len(first)])

    # ------------------------------------------------------------------
    # partial rotations

    def _link(self, x: int, y: int) -> None:
        self.succ[x] = y
        self.has_pred[y] = True

    def _unlink(self, x: int, y: int) -> None:
        self.succ[x] = -1
        self.has_pred[y] = False

    def _can_link(self, x: int, y: int) -> bool:
        """x -> y must not close a cycle shorter than the whole rotation"""
        if self.has_pred[y] or x == y:
            return False
        d, length = y, 1
        while self.succ[d] != -1:
            d = self.succ[d]
            length += 1
        if d != x:
            return True
        return length == len(self.out[self.tail[x]])

    # ------------------------------------------------------------------
    # pruning

    def _dominated(self) -> bool:
        """Closed faces still fit inside some admissible face vector"""
        for counts in self.candidate_counts:
            if all(c <= counts.get(k, 0) for k, c in self.closed.items()):
                return True
        return False

    def _enough_darts(self, open_walk: bool) -> bool:
        remaining = self.darts - self.traced
        return self.closed_count + (1 if open_walk else 0) + remaining // 3 >= self.face_count

    def _prune(self, shadow: bool) -> Tuple[bool, bool]:
        """Returns (keep going, shadow)"""
        if self.split_depth is not None or shadow:
            return True, shadow
        self.result.pruned += 1
        if self.audit:
            return True, True
        return False, shadow

    # ------------------------------------------------------------------
    # depth-first walk

    def _advance(self, start: int, cur: int, length: int, depth: int, shadow: bool) -> None:
        x = cur ^ 1
        y = self.succ[x]
        if y != -1:
            self._step(start, y, length, depth, shadow)
            return
        if self.split_depth is not None and depth == self.split_depth:
            self.collected.append(tuple(self.path))
            return
        replay = depth < len(self.prefix)
        for y in self.out[self.tail[x]]:
            if replay and y != self.prefix[depth]:
                continue
            if not self._can_link(x, y):
                continue
            if not replay and self.split_depth is None:
                if self.budget is not None and self.result.nodes >= self.budget:
                    raise _Exhausted()
                self.result.nodes += 1
            self._link(x, y)
            self.path.append(y)
            self._step(start, y, length, depth + 1, shadow)
            self.path.pop()
            self._unlink(x, y)

    def _step(self, start: int, y: int, length: int, depth: int, shadow: bool) -> None:
        if y == start:
            self.closed[length] += 1
            self.closed_count += 1
            go = True
            if not self._dominated() or not self._enough_darts(False):
                go, shadow = self._prune(shadow)
            if go:
                self._next_face(depth, shadow)
            self.closed[length] -= 1
            if not self.closed[length]:
                del self.closed[length]
            self.closed_count -= 1
            return
        self.in_face[y] = True
        self.traced += 1
        go = True
        if length + 1 > self.max_len:
            go, shadow = self._prune(shadow)
        if go:
            self._advance(start, y, length + 1, depth, shadow)
        self.in_face[y] = False
        self.traced -= 1

    def _next_face(self, depth: int, shadow: bool) -> None:
        start = next((d for d in range(self.darts) if not self.in_face[d]), None)
        if start is None:
            self._leaf(shadow)
            return
        self.in_face[start] = True
        self.traced += 1
        go = True
        if not self._enough_darts(True):
            go, shadow = self._prune(shadow)
        if go:
            self._advance(start, start, 1, depth, shadow)
        self.in_face[start] = False
        self.traced -= 1

    # ------------------------------------------------------------------
    # leaves

    def rotation_system(self) -> RotationSystem:
        rotations = {}
        for v, row in enumerate(self.out):
            order = [row[0]]
            while self.succ[order[-1]] != row[0]:
                order.append(self.succ[order[-1]])
            rotations[self.labels[v]] = order
        edges = [(self.labels[i], self.labels[j]) for i, j in self.edges]
        return RotationSystem.from_parts(edges, rotations)

    def _leaf(self, shadow: bool) -> None:
        if self.split_depth is not None:
            self.collected.append(tuple(self.path))
            return
        vector = tuple(sorted(self.closed.elements()))
        admissible = vector in self.candidate_set
        if shadow:
            if admissible:
                raise SearchError(f"pruned branch holds an admissible embedding with face vector {vector_key(vector)}")
            return
        self.result.leaves += 1
        if not admissible:
            return
        key = vector_key(vector)
        self.result.face_vectors[key] = self.result.face_vectors.get(key, 0) + 1
        if self.shapes:
            self._look_for_covers()

    def _look_for_covers(self) -> None:
        rs = self.rotation_system()
        fs = trace_faces(rs)
        assert fs.genus == self.genus
        for shape in self.shapes:
            if shape.cover_size is not None:
                found = iter_covers(fs, shape.cover_size)
                check = is_facial_cover
            else:
                found = iter_patchworks(fs, shape.lengths)
                check = is_patchwork
            for cover in found:
                assert check(fs, cover)
                self.result.findings.append(
                    Finding(
                        embedding=rs.canonical_text,
                        cover=[list(fs.faces[k].vertices) for k in cover],
                        face_vector=list(fs.face_vector()),
                    )
                )
                if self.max_findings is not None and len(self.result.findings) >= self.max_findings:
                    raise _Stopped()

    # ------------------------------------------------------------------
    # entry points

    def prefixes(self, split_depth: int) -> List[Tuple[int, ...]]:
        """Branch choices down to split_depth (shorter when a leaf comes first)"""
        self.split_depth = split_depth
        self.collected = []
        try:
            self._next_face(0, False)
        finally:
            self.split_depth = None
        return list(self.collected)

    def run(self, prefix: Sequence[int] = ()) -> PrefixResult:
        """Explore everything below one prefix; an instance runs once"""
        self.prefix = tuple(prefix)
        self.result = PrefixResult()
        if not self.candidates:
            return self.result
        try:
            self._next_face(0, False)
        except _Exhausted:
            self.result.exhausted = True
        except _Stopped:
            self.result.stopped = True
        return self.result
