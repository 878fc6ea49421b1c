"""
From a triangular embedding of K_{n+1} - K_3 to a snug K_n x K_2.

The bounded search adds the three missing special edges (one handle plus
chords), repairs faces with chords, flips and deletions, and stops at an
embedding of K_{n+1} whose only nontriangular face is a hexagon meeting
some vertex twice. Splitting that vertex, deleting the two new vertices and
running the tube construction finishes the job.
"""

import heapq
import logging
import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..embedding.faces import FaceSet, trace_faces
from ..embedding.rotation import RotationSystem
from ..errors import PrismaticError, SurgeryError
from ..models import SnugReport
from ..prism.construction import build_prism
from ..prism.snug import check_snug
from ..prism.split_complete import delete_uv, split_complete_check
from .script import Step, apply_step, run_script

logger = logging.getLogger(__name__)


def theorem_c9_target_check(rs: RotationSystem) -> bool:
    """Exactly one nontriangular face, a hexagon with a repeated vertex"""
    fs = trace_faces(rs)
    odd = fs.nontriangular()
    if len(odd) != 1:
        return False
    face = fs.faces[odd[0]]
    return face.sides == 6 and len(face.vertex_set()) < 6


def hexagon_vertex(rs: RotationSystem) -> Tuple[str, int]:
    """The doubly-incident vertex and the hexagon's face index"""
    fs = trace_faces(rs)
    (k,) = fs.nontriangular()
    face = fs.faces[k]
    repeated = [v for v in face.vertex_set() if len(face.corners_at(v)) > 1]
    return sorted(repeated)[0], k


@dataclass
class CompletionResult:
    script: Optional[List[Step]]
    explored: int
    result: Optional[RotationSystem] = None

    @property
    def found(self) -> bool:
        return self.script is not None


def _check_specials(rs: RotationSystem, specials: Sequence[str]) -> None:
    if len(set(specials)) != 3:
        raise PrismaticError("exactly three distinct special vertices are needed")
    for s in specials:
        if not rs.has_vertex(s):
            raise PrismaticError(f"special vertex {s} is missing")
    if not trace_faces(rs).is_triangular():
        raise PrismaticError("the starting embedding must be triangular")
    if not rs.is_simple():
        raise PrismaticError("the starting graph must be simple")
    numbered = [v for v in rs.vertices if v not in specials]
    for a, b in combinations(specials, 2):
        if rs.edges_between(a, b):
            raise PrismaticError(f"special vertices {a} and {b} are adjacent")
    for s in specials:
        if set(rs.neighbors(s)) != set(numbered):
            raise PrismaticError(f"special vertex {s} is not adjacent to every numbered vertex")


def _defects(rs: RotationSystem) -> int:
    """Missing pairs plus surplus parallel edges"""
    pairs: Dict[frozenset, int] = {}
    for edge in rs.adjacency_pairs():
        pairs[edge] = pairs.get(edge, 0) + 1
    n = rs.num_vertices
    missing = n * (n - 1) // 2 - len(pairs)
    return missing + sum(c - 1 for c in pairs.values())


def _priority(rs: RotationSystem, fs: FaceSet) -> Tuple[int, int, int, str]:
    """Edge defects first, then nontriangular faces and their surplus sides"""
    odd = fs.nontriangular()
    excess = sum(fs.faces[k].sides - 3 for k in odd)
    return (_defects(rs), len(odd), excess, rs.canonical_text)


def _is_goal(rs: RotationSystem, fs: FaceSet) -> bool:
    odd = fs.nontriangular()
    if len(odd) != 1 or not rs.is_complete():
        return False
    face = fs.faces[odd[0]]
    return face.sides == 6 and len(face.vertex_set()) < 6


def _moves(rs: RotationSystem, fs: FaceSet, specials: Sequence[str], handle_used: bool) -> Iterator[Step]:
    adjacent = {frozenset(edge) for edge in rs.adjacency_pairs()}
    odd = fs.nontriangular()

    if not handle_used:
        for s1, s2 in combinations(specials, 2):
            if frozenset((s1, s2)) in adjacent:
                continue
            faces1 = [(k, face.corners_at(s1)[0]) for k, face in enumerate(fs.faces) if s1 in face.vertices]
            faces2 = [(k, face.corners_at(s2)[0]) for k, face in enumerate(fs.faces) if s2 in face.vertices]
            for (k1, c1), (k2, c2) in product(faces1, faces2):
                if k1 != k2:
                    yield Step("addhandle", (f"f{k1}", str(c1), f"f{k2}", str(c2)))

    for k in odd:
        face = fs.faces[k]
        size = face.sides
        for i, j in combinations(range(size), 2):
            if j - i < 2 or size - (j - i) < 2:
                continue
            a, b = face.vertices[i], face.vertices[j]
            if a == b:
                continue
            yield Step("addface", (f"f{k}", str(i), str(j)))

    for e, (a, b) in enumerate(rs.edges):
        rank = rs.edge_rank(e)
        token = b if rank == 1 else f"{b}#{rank}"
        parallel = len(rs.edges_between(a, b)) > 1
        if parallel:
            yield Step("del", (a, token))
        left, right = fs.face_containing(2 * e), fs.face_containing(2 * e + 1)
        if left.is_triangle() and right.is_triangle() and left != right:
            c = rs.head(left.rotated_to(2 * e)[1])
            d = rs.head(right.rotated_to(2 * e + 1)[1])
            if c != d and (frozenset((c, d)) not in adjacent or parallel):
                yield Step("flip", (a, token))
        elif not parallel and (a not in specials and b not in specials):
            if fs.face_of_arc(2 * e) != fs.face_of_arc(2 * e + 1):
                yield Step("del", (a, token))


def find_hexagon_completion(
    rs: RotationSystem,
    specials: Sequence[str] = ("x", "y", "z"),
    budget: int = 2000,
    seed: int = 0,
    beam_width: int = 64,
) -> CompletionResult:
    """
    Best-first search for a script ending at a complete graph whose only
    nontriangular face is a hexagon with a repeated vertex. States are
    ranked by (nontriangular faces, surplus sides, missing or doubled edges,
    canonical text); the frontier keeps at most beam_width states. The seed
    only reorders moves, which decides which of several equal scripts is
    reported.
    """
    _check_specials(rs, specials)
    rng = random.Random(seed)
    start_genus = trace_faces(rs).genus
    explored = 0
    seen = {rs.canonical_text}
    frontier: List[Tuple[Tuple, int, RotationSystem, List[Step]]] = []
    counter = 0
    heapq.heappush(frontier, (_priority(rs, trace_faces(rs)), counter, rs, []))

    while frontier and explored < budget:
        _, _, state, script = heapq.heappop(frontier)
        fs = trace_faces(state)
        handle_used = fs.genus > start_genus
        moves = list(_moves(state, fs, specials, handle_used))
        rng.shuffle(moves)
        for step in moves:
            if explored >= budget:
                break
            try:
                child, _ = apply_step(state, fs, step)
            except PrismaticError:
                continue
            explored += 1
            key = child.canonical_text
            if key in seen:
                continue
            seen.add(key)
            child_fs = trace_faces(child)
            if child_fs.genus > start_genus + 1:
                continue
            path = script + [step]
            if _is_goal(child, child_fs):
                logger.info("hexagon completion found after %d states (%d steps)", explored, len(path))
                return CompletionResult(path, explored, child)
            counter += 1
            heapq.heappush(frontier, (_priority(child, child_fs), counter, child, path))
        if len(frontier) > beam_width:
            frontier = heapq.nsmallest(beam_width, frontier)
            heapq.heapify(frontier)

    logger.info("hexagon completion exhausted after %d states", explored)
    return CompletionResult(None, explored)


@dataclass
class PipelineResult:
    status: str
    explored: int
    ledger: Dict[str, int] = field(default_factory=dict)
    script: List[Step] = field(default_factory=list)
    snug: Optional[SnugReport] = None
    prism: Optional[RotationSystem] = None


def finish_from_target(rs: RotationSystem, ledger: Dict[str, int]) -> Tuple[RotationSystem, SnugReport]:
    """split_vertex, delete u and v, build the prism and check it"""
    w, k = hexagon_vertex(rs)
    split = run_script(rs, [Step("split", (w, f"f{k}"))]).result
    ledger["split"] = trace_faces(split).genus
    if not split_complete_check(split):
        raise SurgeryError("split did not produce a split-complete graph")
    base, patchwork = delete_uv(split)
    ledger["delete_uv"] = trace_faces(base).genus
    prism = build_prism(base, patchwork)
    report = check_snug(prism)
    ledger["prism"] = report.genus
    return prism, report


def run_pipeline_c9(
    rs: RotationSystem,
    specials: Sequence[str] = ("x", "y", "z"),
    budget: int = 2000,
    seed: int = 0,
) -> PipelineResult:
    ledger = {"start": trace_faces(rs).genus}
    found = find_hexagon_completion(rs, specials, budget=budget, seed=seed)
    if not found.found:
        return PipelineResult("exhausted", found.explored, ledger)
    # replay so the reported script is checked step by step
    replay = run_script(rs, found.script)
    assert replay.result == found.result
    ledger["completed"] = trace_faces(replay.result).genus
    prism, report = finish_from_target(replay.result, ledger)
    return PipelineResult("snug" if report.snug else "not-snug", found.explored, ledger, found.script, report, prism)
