"""
Current graphs: an embedded graph whose arcs carry elements of Z_m with
alpha(e+) = -alpha(e-).

``.cgr`` files use the embedding syntax with a current on every token::

    m=3
    a: b[+1]
    b: a[-1]
    vortex a x
    vortex b y
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..embedding.emb_format import RotationTable, format_token, iter_content_lines, least_rotation, rotation_tokens
from ..embedding.faces import trace_faces
from ..embedding.rotation import RotationSystem
from ..errors import CurrentGraphError, EmbeddingFormatError
from .logs import CircuitLog, Entry

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r"^m\s*=\s*(\d+)$")
VORTEX_RE = re.compile(r"^vortex\s+(\S+)\s+([A-Za-z])$")


@dataclass(frozen=True)
class CurrentGraph:
    rs: RotationSystem
    modulus: int
    currents: Tuple[int, ...]  # per dart, residues in 1..m-1
    vortex_labels: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        m = self.modulus
        if m < 2:
            raise CurrentGraphError(f"modulus must be at least 2, got {m}")
        if len(self.currents) != self.rs.num_darts:
            raise CurrentGraphError("one current per arc is required")
        for d in range(0, self.rs.num_darts, 2):
            a, b = self.currents[d] % m, self.currents[d + 1] % m
            if a == 0:
                raise CurrentGraphError(f"current 0 on edge {self.rs.edges[d >> 1]}")
            if (a + b) % m != 0:
                raise CurrentGraphError(
                    f"currents on edge {self.rs.edges[d >> 1]} are not opposite: {a} and {b} mod {m}"
                )
        letters = list(self.vortex_labels.values())
        if len(set(letters)) != len(letters):
            raise CurrentGraphError("two vortices share a letter")
        for v, letter in self.vortex_labels.items():
            if not self.rs.has_vertex(v):
                raise CurrentGraphError(f"vortex label on unknown vertex {v}")
            if self.excess(v) == 0:
                raise CurrentGraphError(f"vertex {v} (letter {letter}) satisfies KCL and cannot be a vortex")

    def current(self, d: int) -> int:
        return self.currents[d] % self.modulus

    def degree(self, v: str) -> int:
        return self.rs.degree(v)

    def excess(self, v: str) -> int:
        """Sum of the currents leaving v"""
        return sum(self.current(d) for d in self.rs.rotation(v)) % self.modulus

    def vortices(self) -> List[str]:
        """Vertices with nonzero excess"""
        return [v for v in self.rs.vertices if self.excess(v) != 0]


def parse_current_graph(text: str) -> CurrentGraph:
    modulus: Optional[int] = None
    table = RotationTable()
    vortex_lines: List[Tuple[int, str, str]] = []
    for number, content in iter_content_lines(text):
        header = HEADER_RE.match(content)
        if header:
            if modulus is not None:
                raise EmbeddingFormatError("modulus given twice", number)
            modulus = int(header.group(1))
            continue
        vortex = VORTEX_RE.match(content)
        if vortex:
            vortex_lines.append((number, vortex.group(1), vortex.group(2)))
            continue
        table.add_row(number, content)
    if modulus is None:
        raise EmbeddingFormatError("missing 'm=' header")

    rs = table.to_rotation_system()
    currents: List[Optional[int]] = [None] * rs.num_darts
    for v, row in table.currents.items():
        darts = rs.rotation(v)
        for pos, value in enumerate(row):
            if value is None:
                raise EmbeddingFormatError(f"missing current on a neighbor of {v}", table.lines[v])
            if value % modulus == 0:
                raise EmbeddingFormatError(f"current 0 on a neighbor of {v}", table.lines[v])
            currents[darts[pos]] = value % modulus

    labels: Dict[str, str] = {}
    for number, v, letter in vortex_lines:
        if v in labels:
            raise EmbeddingFormatError(f"vertex {v} labelled twice", number)
        labels[v] = letter
    try:
        return CurrentGraph(rs, modulus, tuple(currents), labels)
    except CurrentGraphError as exc:
        raise EmbeddingFormatError(str(exc)) from exc


def format_current_graph(cg: CurrentGraph) -> str:
    out = [f"m={cg.modulus}"]
    for v in cg.rs.vertices:
        darts = list(cg.rs.rotation(v))
        tokens = rotation_tokens(cg.rs, v)
        start = least_rotation(tokens)
        darts, tokens = darts[start:] + darts[:start], tokens[start:] + tokens[:start]
        body = " ".join(format_token(t, cg.current(d)) for t, d in zip(tokens, darts))
        out.append(f"{v}: {body}".rstrip())
    for v in cg.rs.vertices:
        if v in cg.vortex_labels:
            out.append(f"vortex {v} {cg.vortex_labels[v]}")
    return "\n".join(out) + "\n"


def read_current_graph(path: Union[str, Path]) -> CurrentGraph:
    return parse_current_graph(Path(path).read_text(encoding="utf-8"))


def trace_circuits(cg: CurrentGraph) -> CircuitLog:
    """
    Log every face of the current graph: the current of each arc, followed by
    the letter of the vertex it enters when that vertex is a labelled vortex.
    """
    fs = trace_faces(cg.rs)
    circuits: List[Tuple[Entry, ...]] = []
    for face in fs.faces:
        entries: List[Entry] = []
        for d in face.arcs:
            entries.append(cg.current(d))
            letter = cg.vortex_labels.get(cg.rs.head(d))
            if letter is not None:
                entries.append(letter)
        circuits.append(tuple(entries))
    logger.debug("traced %d circuits over Z_%d", len(circuits), cg.modulus)
    return CircuitLog(cg.modulus, tuple(circuits))
