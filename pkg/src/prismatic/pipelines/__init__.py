"""Scripted and searched transformations towards snug prism embeddings."""

from .c9 import (
    CompletionResult,
    PipelineResult,
    finish_from_target,
    find_hexagon_completion,
    hexagon_vertex,
    run_pipeline_c9,
    theorem_c9_target_check,
)
from .script import ScriptRun, Step, apply_step, format_script, parse_script, read_script, run_script

__all__ = [
    "CompletionResult",
    "PipelineResult",
    "ScriptRun",
    "Step",
    "apply_step",
    "finish_from_target",
    "find_hexagon_completion",
    "format_script",
    "hexagon_vertex",
    "parse_script",
    "read_script",
    "run_pipeline_c9",
    "run_script",
    "theorem_c9_target_check",
]
