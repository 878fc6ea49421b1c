"""Face vectors allowed by Euler's formula, and the shapes a search looks for."""

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..errors import SearchError

FaceVector = Tuple[int, ...]

COVER_RE = re.compile(r"^cover:(\d+)$")


@dataclass(frozen=True)
class Shape:
    """Either a multiset of patchwork face lengths or a plain cover size"""

    lengths: Optional[Tuple[int, ...]] = None
    cover_size: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> "Shape":
        text = text.strip()
        match = COVER_RE.match(text)
        if match:
            size = int(match.group(1))
            if size < 1:
                raise SearchError(f"cover size must be positive in {text!r}")
            return cls(cover_size=size)
        try:
            lengths = tuple(sorted(int(part) for part in text.split(",") if part.strip()))
        except ValueError:
            raise SearchError(f"malformed shape {text!r}: expected '4,5' or 'cover:2'")
        if not lengths or min(lengths) < 3:
            raise SearchError(f"shape {text!r} needs face lengths of at least 3")
        return cls(lengths=lengths)

    def admits(self, vector: FaceVector) -> bool:
        """Could a face set with this vector carry the shape?"""
        if self.cover_size is not None:
            return len(vector) >= self.cover_size
        have = Counter(vector)
        want = Counter(self.lengths)
        nontriangular = Counter({k: c for k, c in have.items() if k != 3})
        return nontriangular <= want and want <= have

    def __str__(self) -> str:
        if self.cover_size is not None:
            return f"cover:{self.cover_size}"
        return ",".join(str(k) for k in self.lengths)


def euler_face_count(n: int, genus: int) -> int:
    edges = n * (n - 1) // 2
    return 2 - 2 * genus - n + edges


def _partitions(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of total into parts no larger than largest, non-increasing"""
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def face_vector_candidates(n: int, genus: int, shapes: Sequence[Shape] = ()) -> List[FaceVector]:
    """
    Every multiset of face lengths (all at least 3) that an embedding of K_n
    of the given genus can have, kept only if some shape admits it.
    """
    faces = euler_face_count(n, genus)
    sides = n * (n - 1)
    surplus = sides - 3 * faces
    if faces < 1 or surplus < 0:
        return []
    vectors = []
    for extra in _partitions(surplus, surplus):
        if len(extra) > faces:
            continue
        vector = tuple(sorted((3,) * (faces - len(extra)) + tuple(3 + x for x in extra)))
        if not shapes or any(shape.admits(vector) for shape in shapes):
            vectors.append(vector)
    return sorted(vectors)


def format_vector(vector: FaceVector) -> str:
    """Compact form such as 3^21 4 5"""
    counts = Counter(vector)
    return " ".join(f"{k}^{c}" if c > 1 else str(k) for k, c in sorted(counts.items()))
