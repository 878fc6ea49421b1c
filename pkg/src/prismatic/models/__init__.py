from .requests import SearchSpec
from .responses import (
    AuditEntry,
    CommandReport,
    Finding,
    FormulaRow,
    PrincipleReport,
    PrincipleResult,
    PrincipleStatus,
    SearchOutcomeReport,
    SearchStatus,
    SnugReport,
)

__all__ = [
    "AuditEntry",
    "CommandReport",
    "Finding",
    "FormulaRow",
    "PrincipleReport",
    "PrincipleResult",
    "PrincipleStatus",
    "SearchOutcomeReport",
    "SearchSpec",
    "SearchStatus",
    "SnugReport",
]
