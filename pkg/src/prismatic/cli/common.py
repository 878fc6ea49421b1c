"""Shared helpers for CLI commands: reports, hashing, output."""

import argparse
import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, List, Optional, Union

from ..embedding.faces import FaceSet
from ..models import CommandReport

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2


@dataclass
class Outcome:
    """What a command hands back to the dispatcher"""

    report: CommandReport
    lines: List[str] = field(default_factory=list)
    exit_code: int = EXIT_OK


def new_report(command: str) -> CommandReport:
    return CommandReport(command=command, ok=True, generated_at=datetime.now(timezone.utc))


def sha256_file(path: Union[str, Path]) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def hash_inputs(report: CommandReport, **paths: Optional[str]) -> None:
    for name, path in paths.items():
        if path is not None:
            report.inputs[name] = sha256_file(path)


def face_counts(report: CommandReport, fs: FaceSet, prefix: str = "") -> None:
    report.counts.update({f"{prefix}v": fs.v, f"{prefix}e": fs.e, f"{prefix}f": fs.f})
    report.genus[prefix.rstrip("_") or "genus"] = fs.genus


def length_summary(fs: FaceSet) -> str:
    return ", ".join(f"{count}x{sides}" for sides, count in sorted(fs.lengths.items()))


def write_text(report: CommandReport, path: Union[str, Path], text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    report.outputs.append(str(path))
    return path


def verdict(outcome: Outcome, name: str, ok: bool, message: str) -> None:
    """Record a pass/fail verdict; a failure turns into exit code 2"""
    outcome.report.verdicts[name] = ok
    outcome.lines.append(("✅ " if ok else "❌ ") + message)
    if not ok:
        outcome.report.ok = False
        outcome.exit_code = EXIT_VERIFY


def render(report: CommandReport) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2)


def emit(outcome: Outcome, as_json: bool) -> None:
    if as_json:
        print(render(outcome.report))
        return
    for line in outcome.lines:
        print(line)


def add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="print a machine-readable report")
    parser.add_argument("--verbose", "-v", action="store_true", help="log progress to stderr")


def details(report: CommandReport, **values: Any) -> None:
    report.details.update(values)
