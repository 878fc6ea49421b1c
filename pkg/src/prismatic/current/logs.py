"""
Circuit logs: the sequence of currents (and vortex letters) read along each
face boundary of a current graph.

File layout::

    m=19 index=1
    circuit 0: 15 x 4 11 5 y 14 ...

The printed layout ``[0]. 15 x 4 ...`` is accepted as well.
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple, Union

from ..embedding.emb_format import iter_content_lines
from ..errors import CurrentGraphError, EmbeddingFormatError

Entry = Union[int, str]

HEADER_RE = re.compile(r"^(\w+)\s*=\s*(-?\d+)$")
CIRCUIT_RE = re.compile(r"^(?:circuit\s+(\d+)\s*:|\[(\d+)\]\.?)\s*(.*)$")
LETTER_RE = re.compile(r"^[A-Za-z]$")
INT_RE = re.compile(r"^[+-]?\d+$")


@dataclass(frozen=True)
class CircuitLog:
    modulus: int
    circuits: Tuple[Tuple[Entry, ...], ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise CurrentGraphError(f"modulus must be at least 2, got {self.modulus}")
        for i, circuit in enumerate(self.circuits):
            letters = [x for x in circuit if isinstance(x, str)]
            if len(set(letters)) != len(letters):
                raise CurrentGraphError(f"circuit {i} repeats a vortex letter")
            for x in circuit:
                if isinstance(x, int) and not 0 < x < self.modulus:
                    raise CurrentGraphError(f"circuit {i}: current {x} is not a nonzero residue mod {self.modulus}")

    @property
    def index(self) -> int:
        return len(self.circuits)

    def letters(self) -> List[str]:
        """Vortex letters in order of first appearance"""
        seen: List[str] = []
        for circuit in self.circuits:
            for x in circuit:
                if isinstance(x, str) and x not in seen:
                    seen.append(x)
        return seen

    def currents(self, i: int) -> List[int]:
        return [x for x in self.circuits[i] if isinstance(x, int)]

    def occurrences(self, letter: str) -> List[Tuple[int, int]]:
        """(circuit, position) of every appearance of a letter"""
        return [
            (i, pos)
            for i, circuit in enumerate(self.circuits)
            for pos, x in enumerate(circuit)
            if x == letter
        ]

    def neighbors_of(self, i: int, pos: int) -> Tuple[int, int]:
        """Nearest currents before and after position pos, cyclically"""
        circuit = self.circuits[i]
        k = len(circuit)
        before = next(circuit[(pos - s) % k] for s in range(1, k) if isinstance(circuit[(pos - s) % k], int))
        after = next(circuit[(pos + s) % k] for s in range(1, k) if isinstance(circuit[(pos + s) % k], int))
        return before, after


def _parse_entry(token: str, modulus: int, line: int) -> Entry:
    if INT_RE.match(token):
        value = int(token) % modulus
        if value == 0:
            raise EmbeddingFormatError(f"current 0 ({token}) is not allowed", line)
        return value
    if LETTER_RE.match(token):
        return token
    raise EmbeddingFormatError(f"unknown token {token!r}", line)


def parse_log(text: str) -> CircuitLog:
    header: Dict[str, int] = {}
    rows: Dict[int, Tuple[int, str]] = {}
    for number, content in iter_content_lines(text):
        match = CIRCUIT_RE.match(content)
        if match:
            if "m" not in header:
                raise EmbeddingFormatError("circuit before the 'm=' header", number)
            i = int(match.group(1) if match.group(1) is not None else match.group(2))
            if i in rows:
                raise EmbeddingFormatError(f"circuit {i} listed twice", number)
            rows[i] = (number, match.group(3))
            continue
        if rows:
            raise EmbeddingFormatError(f"unexpected line {content!r}", number)
        for part in content.split():
            kv = HEADER_RE.match(part)
            if not kv or kv.group(1) not in ("m", "index"):
                raise EmbeddingFormatError(f"malformed header field {part!r}", number)
            header[kv.group(1)] = int(kv.group(2))

    if "m" not in header:
        raise EmbeddingFormatError("missing 'm=' header")
    modulus = header["m"]
    if modulus < 2:
        raise EmbeddingFormatError(f"modulus must be at least 2, got {modulus}")
    if sorted(rows) != list(range(len(rows))) or not rows:
        raise EmbeddingFormatError(f"circuits must be numbered 0..k-1, got {sorted(rows)}")
    if "index" in header and header["index"] != len(rows):
        raise EmbeddingFormatError(f"header says index={header['index']} but {len(rows)} circuits are listed")

    circuits = []
    for i in range(len(rows)):
        number, body = rows[i]
        entries = tuple(_parse_entry(tok, modulus, number) for tok in body.replace(".", " ").split())
        if not any(isinstance(x, int) for x in entries):
            raise EmbeddingFormatError(f"circuit {i} has no currents", number)
        circuits.append(entries)
    try:
        return CircuitLog(modulus, tuple(circuits))
    except CurrentGraphError as exc:
        raise EmbeddingFormatError(str(exc)) from exc


def format_log(log: CircuitLog) -> str:
    out = [f"m={log.modulus} index={log.index}"]
    for i, circuit in enumerate(log.circuits):
        out.append(f"circuit {i}: " + " ".join(str(x) for x in circuit))
    return "\n".join(out) + "\n"


def read_log(path: Union[str, Path]) -> CircuitLog:
    return parse_log(Path(path).read_text(encoding="utf-8"))
