"""
Transformation scripts: a list of surgery steps replayed with an audit of
(v, e, f, genus) after every step.

One step per line::

    flip a b
    addface f3 0 2
    addhandle f1 0 f7 2
    del a b#2
    subdivide f4 x
    split w f0 [u v]
    contract a b
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from ..embedding.emb_format import iter_content_lines, parse_token
from ..embedding.faces import FaceSet, trace_faces
from ..embedding.rotation import RotationSystem
from ..embedding.surgery import (
    add_edge_across_faces,
    add_edge_in_face,
    contract_edge,
    delete_edge,
    flip_edge,
    split_vertex,
    subdivide_face,
)
from ..errors import EmbeddingFormatError, PrismaticError, ScriptError
from ..models import AuditEntry

logger = logging.getLogger(__name__)

FACE_RE = re.compile(r"^f?(\d+)$")

ARITY = {
    "flip": (2,),
    "addface": (3,),
    "addhandle": (4,),
    "del": (2,),
    "subdivide": (2,),
    "split": (2, 4),
    "contract": (2,),
}

Delta = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Step:
    op: str
    args: Tuple[str, ...]

    def __str__(self) -> str:
        return " ".join((self.op,) + self.args)


@dataclass
class ScriptRun:
    result: RotationSystem
    audit: List[AuditEntry] = field(default_factory=list)


def parse_script(text: str) -> List[Step]:
    steps = []
    for number, content in iter_content_lines(text):
        op, *args = content.split()
        if op not in ARITY:
            raise EmbeddingFormatError(f"unknown step {op!r}", number)
        if len(args) not in ARITY[op]:
            raise EmbeddingFormatError(f"{op} takes {' or '.join(map(str, ARITY[op]))} arguments", number)
        steps.append(Step(op, tuple(args)))
    return steps


def format_script(steps: Sequence[Step]) -> str:
    return "".join(f"{step}\n" for step in steps)


def read_script(path: Union[str, Path]) -> List[Step]:
    return parse_script(Path(path).read_text(encoding="utf-8"))


def _face(token: str) -> int:
    match = FACE_RE.match(token)
    if not match:
        raise PrismaticError(f"expected a face like f3, got {token!r}")
    return int(match.group(1))


def _edge(rs: RotationSystem, a: str, b: str) -> int:
    name, k, _ = parse_token(b)
    return rs.find_edge(a, name, k)


def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise PrismaticError(f"expected a corner index, got {token!r}")


def apply_step(rs: RotationSystem, fs: FaceSet, step: Step) -> Tuple[RotationSystem, Delta]:
    """Apply one step and return the (v, e, f, genus) change it must cause"""
    op, args = step.op, step.args
    if op == "flip":
        return flip_edge(rs, _edge(rs, *args)), (0, 0, 0, 0)
    if op == "addface":
        return add_edge_in_face(rs, _face(args[0]), _int(args[1]), _int(args[2])), (0, 1, 1, 0)
    if op == "addhandle":
        return add_edge_across_faces(rs, _face(args[0]), _int(args[1]), _face(args[2]), _int(args[3])), (0, 1, -1, 1)
    if op == "del":
        e = _edge(rs, *args)
        same = fs.face_of_arc(2 * e) == fs.face_of_arc(2 * e + 1)
        return delete_edge(rs, e), ((0, -1, 1, -1) if same else (0, -1, -1, 0))
    if op == "subdivide":
        index = _face(args[0])
        if index >= fs.f:
            raise PrismaticError(f"face index {index} out of range (0..{fs.f - 1})")
        k = fs.faces[index].sides
        return subdivide_face(rs, index, args[1]), (1, k, k - 1, 0)
    if op == "split":
        labels = args[2:] if len(args) == 4 else ("u", "v")
        return split_vertex(rs, args[0], _face(args[1]), *labels), (1, 0, 1, -1)
    if op == "contract":
        return contract_edge(rs, _edge(rs, *args)), (-1, -1, 0, 0)
    raise PrismaticError(f"unknown step {op!r}")


def run_script(rs: RotationSystem, steps: Sequence[Step]) -> ScriptRun:
    fs = trace_faces(rs)
    run = ScriptRun(rs, [AuditEntry(step=0, op="start", v=fs.v, e=fs.e, f=fs.f, genus=fs.genus, expected_delta=[0, 0, 0, 0])])
    for number, step in enumerate(steps, start=1):
        state = fs.counts
        try:
            rs, delta = apply_step(rs, fs, step)
        except PrismaticError as exc:
            raise ScriptError(f"{step}: {exc}", number, state) from exc
        fs = trace_faces(rs)
        expected = tuple(s + d for s, d in zip(state, delta))
        if fs.counts != expected:
            raise ScriptError(f"{step}: counts {fs.counts} differ from expected {expected}", number, state)
        run.audit.append(
            AuditEntry(step=number, op=str(step), v=fs.v, e=fs.e, f=fs.f, genus=fs.genus, expected_delta=list(delta))
        )
        logger.debug("step %d %s -> genus %d", number, step, fs.genus)
    run.result = rs
    return run
