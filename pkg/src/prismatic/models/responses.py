from pydantic import BaseModel
from typing import Optional, List, Dict, Any
from datetime import datetime
from enum import Enum


class PrincipleStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_CHECKABLE = "not_checkable"


class PrincipleResult(BaseModel):
    """Verdict for one construction principle"""
    name: str
    status: PrincipleStatus
    detail: str = ""
    witness: List[str] = []


class PrincipleReport(BaseModel):
    kind: str
    modulus: int
    index: int
    results: List[PrincipleResult]

    @property
    def passed(self) -> bool:
        return all(r.status != PrincipleStatus.FAIL for r in self.results)

    def result(self, name: str) -> PrincipleResult:
        return next(r for r in self.results if r.name == name)


class SnugReport(BaseModel):
    """Snugness verdict for an embedded prism graph"""
    snug: bool
    n: int
    genus: int
    faces: int
    matching_edges: int
    matching_faces: List[str] = []
    witness: Optional[str] = None
    matching_incidences_ok: bool = True
    nonconsecutive_ok: bool = True
    expected_genus: Optional[int] = None
    expected_faces: Optional[int] = None


class AuditEntry(BaseModel):
    """State after one transformation step, with the delta it promised"""
    step: int
    op: str
    v: int
    e: int
    f: int
    genus: int
    expected_delta: List[int]


class SearchStatus(str, Enum):
    COMPLETE = "complete"
    BUDGET_EXHAUSTED = "budget-exhausted"
    STOPPED = "stopped"


class Finding(BaseModel):
    """A certificate: an embedding plus the cover faces found on it"""
    embedding: str
    cover: List[List[str]]
    face_vector: List[int]


class SearchOutcomeReport(BaseModel):
    status: SearchStatus
    nodes: int
    leaves: int
    pruned: int
    findings: List[Finding] = []
    face_vectors: Dict[str, int] = {}
    prefixes_done: int = 0
    prefixes_total: int = 0


class FormulaRow(BaseModel):
    n: int
    lower_bound: int
    genus: int
    exception: bool


class CommandReport(BaseModel):
    """Machine-readable result of one CLI invocation"""
    command: str
    ok: bool
    inputs: Dict[str, str] = {}
    verdicts: Dict[str, Any] = {}
    counts: Dict[str, int] = {}
    genus: Dict[str, int] = {}
    outputs: List[str] = []
    details: Dict[str, Any] = {}
    error: Optional[str] = None
    generated_at: datetime
