r"""
Rotation systems of multigraphs.

Every edge ``i`` owns two darts (arcs): ``2i`` runs from ``edges[i][0]`` to
``edges[i][1]`` and ``2i + 1`` runs back, so ``d ^ 1`` is always the
opposite arc of ``d``. The rotation of a vertex is the cyclic sequence of the
darts leaving it.
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..errors import EmbeddingFormatError, InvalidEmbeddingError

LABEL_RE = re.compile(r"^[A-Za-z0-9_']+$")

Token = Tuple[str, int]


def vertex_sort_key(label: str) -> Tuple[int, int, str]:
    """Numbers first in numeric order, then everything else alphabetically"""
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def check_label(label: str) -> str:
    if not label or not LABEL_RE.match(label):
        raise InvalidEmbeddingError(f"invalid vertex label {label!r}")
    return label


@dataclass(frozen=True, eq=False)
class RotationSystem:
    """Immutable rotation system; surgery operations return new instances"""

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]
    rotations: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.rotations):
            raise InvalidEmbeddingError("one rotation per vertex is required")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidEmbeddingError("duplicate vertex")
        index = {v: i for i, v in enumerate(self.vertices)}
        for a, b in self.edges:
            if a not in index or b not in index:
                raise InvalidEmbeddingError(f"edge ({a}, {b}) has an endpoint outside the vertex set")
        seen = [False] * (2 * len(self.edges))
        for v, rotation in zip(self.vertices, self.rotations):
            for d in rotation:
                if d < 0 or d >= len(seen):
                    raise InvalidEmbeddingError(f"unknown arc {d} in rotation of {v}")
                if seen[d]:
                    raise InvalidEmbeddingError(f"arc {d} placed twice (second time at {v})")
                if self.tail(d) != v:
                    raise InvalidEmbeddingError(f"arc {d} does not leave {v}")
                seen[d] = True
        missing = [d for d, ok in enumerate(seen) if not ok]
        if missing:
            e = missing[0] >> 1
            raise InvalidEmbeddingError(f"dangling end of edge {self.edges[e]} (arc {missing[0]} unplaced)")

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_parts(
        cls,
        edges: Sequence[Tuple[str, str]],
        rotations: Mapping[str, Sequence[int]],
    ) -> "RotationSystem":
        """Build from an edge list and per-vertex dart sequences; vertices get sorted"""
        order = sorted(rotations, key=vertex_sort_key)
        for v in order:
            check_label(v)
        return cls(
            vertices=tuple(order),
            edges=tuple((a, b) for a, b in edges),
            rotations=tuple(tuple(rotations[v]) for v in order),
        )

    @classmethod
    def from_token_rotations(
        cls,
        tokens: Mapping[str, Sequence[Token]],
        lines: Optional[Mapping[str, int]] = None,
    ) -> "RotationSystem":
        """
        Pair up neighbor tokens ``(label, k)`` into edges.

        Token ``(b, k)`` in the rotation of ``a`` is one end of the k-th
        a-b edge. Suffixes are renumbered by rank, so any increasing set of
        k values per vertex pair is accepted. Rotations keep the written
        order, which lets callers map token positions back to darts.
        """
        lines = lines or {}

        def fail(message: str, vertex: str):
            raise EmbeddingFormatError(message, lines.get(vertex))

        # ends[(lo, hi, k)] -> list of (vertex, position)
        ends: Dict[Tuple[str, str, int], List[Tuple[str, int]]] = {}
        for a, row in tokens.items():
            check_label(a)
            for pos, (b, k) in enumerate(row):
                if b not in tokens:
                    fail(f"dangling edge end: {a} lists unknown vertex {b}", a)
                lo, hi = sorted((a, b), key=vertex_sort_key)
                ends.setdefault((lo, hi, k), []).append((a, pos))

        for (lo, hi, k), placed in ends.items():
            if lo == hi:
                if len(placed) != 2:
                    fail(f"loop {lo}#{k} needs exactly two ends, found {len(placed)}", lo)
                continue
            at_lo = [p for p in placed if p[0] == lo]
            at_hi = [p for p in placed if p[0] == hi]
            if len(at_lo) > 1:
                fail(f"duplicate arc-end placement of edge {lo}-{hi}#{k} at {lo}", lo)
            if len(at_hi) > 1:
                fail(f"duplicate arc-end placement of edge {lo}-{hi}#{k} at {hi}", hi)
            if not at_lo or not at_hi:
                where = lo if at_lo else hi
                fail(f"dangling edge end: {lo}-{hi}#{k} is listed at {where} only", where)

        # rank parallel suffixes per vertex pair
        by_pair: Dict[Tuple[str, str], List[int]] = {}
        for lo, hi, k in ends:
            by_pair.setdefault((lo, hi), []).append(k)
        keys = []
        for (lo, hi), ks in by_pair.items():
            for k in sorted(ks):
                keys.append((lo, hi, k))
        keys.sort(key=lambda t: (vertex_sort_key(t[0]), vertex_sort_key(t[1]), t[2]))

        edges: List[Tuple[str, str]] = []
        rotations: Dict[str, List[int]] = {v: [-1] * len(row) for v, row in tokens.items()}
        for eid, key in enumerate(keys):
            lo, hi, _ = key
            edges.append((lo, hi))
            placed = sorted(ends[key], key=lambda p: (p[0] != lo, p[1]))
            (va, pa), (vb, pb) = placed
            rotations[va][pa] = 2 * eid
            rotations[vb][pb] = 2 * eid + 1
        return cls.from_parts(edges, rotations)

    @classmethod
    def from_neighbor_rotations(cls, rotations: Mapping[str, Sequence[str]]) -> "RotationSystem":
        """Simple-graph shorthand: each rotation is a sequence of neighbor labels"""
        return cls.from_token_rotations({v: [(w, 1) for w in row] for v, row in rotations.items()})

    # ------------------------------------------------------------------
    # basic queries

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _succ(self) -> List[int]:
        succ = [0] * (2 * len(self.edges))
        for rotation in self.rotations:
            k = len(rotation)
            for i, d in enumerate(rotation):
                succ[d] = rotation[(i + 1) % k]
        return succ

    @cached_property
    def _pred(self) -> List[int]:
        pred = [0] * (2 * len(self.edges))
        for d, s in enumerate(self._succ):
            pred[s] = d
        return pred

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def rotation(self, v: str) -> Tuple[int, ...]:
        try:
            return self.rotations[self._index[v]]
        except KeyError:
            raise InvalidEmbeddingError(f"unknown vertex {v!r}")

    def tail(self, d: int) -> str:
        return self.edges[d >> 1][d & 1]

    def head(self, d: int) -> str:
        return self.edges[d >> 1][1 - (d & 1)]

    def succ(self, d: int) -> int:
        """Next dart after ``d`` in the rotation at its tail"""
        return self._succ[d]

    def pred(self, d: int) -> int:
        return self._pred[d]

    def face_successor(self, d: int) -> int:
        """Tracing rule: after arriving along ``d``, leave along succ of its reverse"""
        return self._succ[d ^ 1]

    def degree(self, v: str) -> int:
        return len(self.rotation(v))

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return tuple(self.head(d) for d in self.rotation(v))

    def edges_between(self, a: str, b: str) -> List[int]:
        return [i for i, (x, y) in enumerate(self.edges) if (x, y) == (a, b) or (x, y) == (b, a)]

    def find_edge(self, a: str, b: str, k: int = 1) -> int:
        """Edge id of the k-th a-b edge (1-based, by edge id order)"""
        found = self.edges_between(a, b)
        if k < 1 or k > len(found):
            raise InvalidEmbeddingError(f"no edge {a}-{b}#{k}")
        return found[k - 1]

    @cached_property
    def _ranks(self) -> List[int]:
        counter: Dict[frozenset, int] = {}
        ranks = []
        for a, b in self.edges:
            key = frozenset((a, b))
            counter[key] = counter.get(key, 0) + 1
            ranks.append(counter[key])
        return ranks

    def edge_rank(self, e: int) -> int:
        """Position of e among the parallel edges with its endpoints (1-based)"""
        return self._ranks[e]

    def is_loop(self, e: int) -> bool:
        a, b = self.edges[e]
        return a == b

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.edges:
            if a == b:
                return False
            key = frozenset((a, b))
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_complete(self) -> bool:
        """Simple and every pair of vertices adjacent"""
        n = len(self.vertices)
        return self.is_simple() and len(self.edges) == n * (n - 1) // 2

    def to_multigraph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return nx.is_connected(self.to_multigraph())

    def relabel(self, mapping: Mapping[str, str]) -> "RotationSystem":
        """Rename vertices; labels missing from ``mapping`` are kept"""
        rename = lambda v: mapping.get(v, v)  # noqa: E731
        if len({rename(v) for v in self.vertices}) != len(self.vertices):
            raise InvalidEmbeddingError("relabelling merges vertices")
        return RotationSystem.from_parts(
            [(rename(a), rename(b)) for a, b in self.edges],
            {rename(v): rot for v, rot in zip(self.vertices, self.rotations)},
        )

    def adjacency_pairs(self) -> Iterable[frozenset]:
        return (frozenset(edge) for edge in self.edges)

    # ------------------------------------------------------------------
    # identity

    @cached_property
    def canonical_text(self) -> str:
        from .emb_format import serialize_embedding  # emb_format imports this module

        return serialize_embedding(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self.canonical_text == other.canonical_text

    def __hash__(self) -> int:
        return hash(self.canonical_text)

    def __repr__(self) -> str:
        return f"RotationSystem(v={self.num_vertices}, e={self.num_edges})"
