"""Construction principles for index-1 (A1-A4) and index-3 (B1-B4) current graphs."""

from collections import Counter
from math import gcd
from typing import List, Optional, Sequence

from ..embedding.faces import trace_faces
from ..errors import PrincipleError
from ..models import PrincipleReport, PrincipleResult, PrincipleStatus
from .current_graph import CurrentGraph
from .logs import CircuitLog


def _result(name: str, witness: List[str], detail: str) -> PrincipleResult:
    status = PrincipleStatus.FAIL if witness else PrincipleStatus.PASS
    return PrincipleResult(name=name, status=status, detail=detail if witness else "", witness=witness)


def _not_checkable(name: str) -> PrincipleResult:
    return PrincipleResult(
        name=name,
        status=PrincipleStatus.NOT_CHECKABLE,
        detail="needs the structural current graph",
    )


def _each_element_once(currents: Sequence[int], modulus: int) -> List[str]:
    counts = Counter(currents)
    return [str(k) for k in range(1, modulus) if counts[k] != 1]


def check_index1(log: CircuitLog, cg: Optional[CurrentGraph] = None) -> PrincipleReport:
    if log.index != 1:
        raise PrincipleError(f"index-1 principles need one circuit, log has {log.index}")
    m = log.modulus
    results = [
        _result("A2", _each_element_once(log.currents(0), m), "elements not appearing exactly once"),
    ]
    if cg is None:
        results = [_not_checkable("A1"), *results, _not_checkable("A3"), _not_checkable("A4")]
        return PrincipleReport(kind="index1", modulus=m, index=1, results=results)

    if cg.modulus != m:
        raise PrincipleError(f"log is over Z_{m} but the current graph is over Z_{cg.modulus}")
    if trace_faces(cg.rs).f != 1:
        raise PrincipleError("the current graph does not have index 1")
    vertices = cg.rs.vertices
    a1 = [v for v in vertices if cg.degree(v) not in (1, 3)]
    a3 = [f"{v} (excess {cg.excess(v)})" for v in vertices if cg.degree(v) == 3 and cg.excess(v) != 0]
    a4 = [f"{v} (excess {cg.excess(v)})" for v in vertices if cg.degree(v) == 1 and gcd(cg.excess(v), m) != 1]
    results = [
        _result("A1", a1, "vertices of degree other than 1 or 3"),
        *results,
        _result("A3", a3, "degree-3 vertices violating KCL"),
        _result("A4", a4, f"degree-1 excess does not generate Z_{m}"),
    ]
    return PrincipleReport(kind="index1", modulus=m, index=1, results=results)


def check_index3(cg: CurrentGraph, numbering: Optional[Sequence[int]] = None) -> PrincipleReport:
    """
    ``numbering[k]`` is the circuit number of canonical face k; by default
    faces are numbered in canonical order.
    """
    fs = trace_faces(cg.rs)
    if fs.f != 3:
        raise PrincipleError(f"index-3 principles need three circuits, graph has {fs.f}")
    numbering = list(numbering) if numbering is not None else [0, 1, 2]
    if sorted(numbering) != [0, 1, 2]:
        raise PrincipleError(f"circuit numbering must be a permutation of 0, 1, 2, got {numbering}")
    m = cg.modulus

    b1 = [v for v in cg.rs.vertices if cg.degree(v) != 3]

    b2 = []
    for k, face in enumerate(fs.faces):
        missing = _each_element_once([cg.current(d) for d in face.arcs], m)
        if missing:
            b2.append(f"circuit {numbering[k]}: {' '.join(missing)}")

    b3 = []
    target = gcd(3, m)
    for v in cg.vortices():
        absent = [numbering[k] for k, face in enumerate(fs.faces) if v not in face.vertices]
        if absent:
            b3.append(f"{v} misses circuit(s) {sorted(absent)}")
        if gcd(cg.excess(v), m) != target:
            b3.append(f"{v} has excess {cg.excess(v)}, which does not generate <3>")

    b4 = []
    for e, (a, b) in enumerate(cg.rs.edges):
        i = numbering[fs.face_of_arc(2 * e)]
        j = numbering[fs.face_of_arc(2 * e + 1)]
        alpha = cg.current(2 * e)
        if (j - i - alpha) % 3 != 0:
            b4.append(f"{a}->{b} (current {alpha}, circuits {i} and {j})")

    results = [
        _result("B1", b1, "vertices of degree other than 3"),
        _result("B2", b2, "elements not appearing exactly once per circuit"),
        _result("B3", b3, "vortex incidence or excess"),
        _result("B4", b4, "arcs with j - i != alpha (mod 3)"),
    ]
    return PrincipleReport(kind="index3", modulus=m, index=3, results=results)
