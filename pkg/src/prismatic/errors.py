"""Exception hierarchy shared by every prismatic module."""

from typing import Optional, Tuple


class PrismaticError(ValueError):
    """Base class for input and precondition errors"""


class EmbeddingFormatError(PrismaticError):
    """Malformed text input; carries the 1-based line number when known"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidEmbeddingError(PrismaticError):
    pass


class SurgeryError(PrismaticError):
    pass


class DisconnectionError(SurgeryError):
    pass


class CurrentGraphError(PrismaticError):
    pass


class PrincipleError(CurrentGraphError):
    pass


class CoverError(PrismaticError):
    pass


class NotPrismError(PrismaticError):
    pass


class NotSnugError(PrismaticError):
    pass


class SplitCompleteError(PrismaticError):
    pass


class ScriptError(PrismaticError):
    """A transformation step failed; `state` is (v, e, f, genus) before the step"""

    def __init__(self, message: str, step: int, state: Tuple[int, int, int, int]):
        self.step = step
        self.state = state
        v, e, f, g = state
        super().__init__(f"step {step}: {message} (state before step: v={v} e={e} f={f} genus={g})")


class SearchError(PrismaticError):
    pass


class CheckpointError(SearchError):
    pass


class ConfigError(PrismaticError):
    """Unusable PRISMATIC_* environment value"""
