"""
Reader and writer for the ``.emb`` embedding format.

One vertex per line, ``label: n1 n2 ... nk``, listing the rotation as
neighbor tokens. ``b#2`` names the second of several parallel a-b edges, a
loop shows up as its own label twice, and ``#`` after whitespace starts a
comment.
"""

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from ..errors import EmbeddingFormatError
from .rotation import RotationSystem, Token, vertex_sort_key

COMMENT_RE = re.compile(r"(^|\s)#.*$")
TOKEN_RE = re.compile(r"^([A-Za-z0-9_']+)(?:#(\d+))?(?:\[([+-]?\d+)\])?$")
LINE_RE = re.compile(r"^([A-Za-z0-9_']+)\s*:(.*)$")


def iter_content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield ``(line_number, content)`` with comments stripped and blanks skipped"""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = COMMENT_RE.sub("", raw).strip()
        if content:
            yield number, content


def parse_token(token: str, line: Optional[int] = None) -> Tuple[str, int, Optional[int]]:
    """Split ``name#k[current]`` into ``(name, k, current)``"""
    match = TOKEN_RE.match(token)
    if not match:
        raise EmbeddingFormatError(f"malformed token {token!r}", line)
    name, k, current = match.groups()
    rank = int(k) if k is not None else 1
    if rank < 1:
        raise EmbeddingFormatError(f"parallel-edge suffix must be positive in {token!r}", line)
    return name, rank, int(current) if current is not None else None


@dataclass
class RotationTable:
    """Raw per-vertex token rows as read from a file, before pairing"""

    tokens: Dict[str, List[Token]] = field(default_factory=dict)
    currents: Dict[str, List[Optional[int]]] = field(default_factory=dict)
    lines: Dict[str, int] = field(default_factory=dict)

    def add_row(self, number: int, content: str) -> None:
        match = LINE_RE.match(content)
        if not match:
            raise EmbeddingFormatError(f"expected 'vertex: neighbors', got {content!r}", number)
        label, rest = match.group(1), match.group(2)
        if label in self.tokens:
            raise EmbeddingFormatError(f"duplicate vertex {label}", number)
        row: List[Token] = []
        currents: List[Optional[int]] = []
        for token in rest.split():
            name, k, current = parse_token(token, number)
            row.append((name, k))
            currents.append(current)
        self.tokens[label] = row
        self.currents[label] = currents
        self.lines[label] = number

    def has_currents(self) -> bool:
        return any(c is not None for row in self.currents.values() for c in row)

    def to_rotation_system(self) -> RotationSystem:
        if not self.tokens:
            raise EmbeddingFormatError("no vertices found")
        return RotationSystem.from_token_rotations(self.tokens, self.lines)


def parse_embedding(text: str) -> RotationSystem:
    table = RotationTable()
    for number, content in iter_content_lines(text):
        table.add_row(number, content)
    if table.has_currents():
        first = next(v for v, row in table.currents.items() if any(c is not None for c in row))
        raise EmbeddingFormatError("currents are only allowed in current-graph files", table.lines[first])
    return table.to_rotation_system()


def rotation_tokens(rs: RotationSystem, v: str) -> List[Token]:
    """Neighbor tokens of v in rotation order (rank = position among parallel edges)"""
    return [(rs.head(d), rs.edge_rank(d >> 1)) for d in rs.rotation(v)]


def _token_key(token: Token):
    return (vertex_sort_key(token[0]), token[1])


def least_rotation(items: List) -> int:
    """Start index of the lexicographically least cyclic shift"""
    if not items:
        return 0
    keys = [_token_key(t) for t in items]
    return min(range(len(keys)), key=lambda i: keys[i:] + keys[:i])


def format_token(token: Token, current: Optional[int] = None) -> str:
    name, k = token
    text = name if k == 1 else f"{name}#{k}"
    if current is not None:
        text += f"[{current:+d}]"
    return text


def serialize_embedding(rs: RotationSystem) -> str:
    """Canonical text: vertices sorted, each rotation started at its least token"""
    out = []
    for v in rs.vertices:
        row = rotation_tokens(rs, v)
        start = least_rotation(row)
        row = row[start:] + row[:start]
        body = " ".join(format_token(t) for t in row)
        out.append(f"{v}: {body}".rstrip())
    return "\n".join(out) + "\n"


def normalize(text: str) -> str:
    return serialize_embedding(parse_embedding(text))


def read_embedding(path: Union[str, Path]) -> RotationSystem:
    return parse_embedding(Path(path).read_text(encoding="utf-8"))


def write_embedding(rs: RotationSystem, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(serialize_embedding(rs), encoding="utf-8")
    return path


def parse_face_list(text: str) -> List[Tuple[str, ...]]:
    """``.cov`` files: one face per line as its corner sequence"""
    faces = []
    for _, content in iter_content_lines(text):
        faces.append(tuple(content.replace(",", " ").strip("[] ").split()))
    return faces


def format_face_list(faces: Iterable[Tuple[str, ...]]) -> str:
    return "".join(" ".join(face) + "\n" for face in faces)
