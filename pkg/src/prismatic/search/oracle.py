"""Brute-force enumeration for small n, used to cross-check the backtracking search."""

from collections import Counter
from itertools import permutations, product
from typing import Dict, List

from ..embedding.faces import trace_faces
from ..embedding.rotation import RotationSystem
from ..errors import SearchError
from .backtrack import vector_key
from .face_vectors import euler_face_count

ORACLE_LIMIT = 6


def _cyclic_orders(items: List[str]) -> List[List[str]]:
    first, rest = items[0], items[1:]
    return [[first, *perm] for perm in permutations(rest)]


def brute_force_face_vectors(n: int) -> Counter:
    """Face-vector tally over every rotation system of K_n with vertex 1 ascending"""
    if not 3 <= n <= ORACLE_LIMIT:
        raise SearchError(f"brute force is limited to 3 <= n <= {ORACLE_LIMIT}")
    labels = [str(i + 1) for i in range(n)]
    fixed = labels[1:]
    choices = [_cyclic_orders([w for w in labels if w != v]) for v in labels[1:]]
    tally: Counter = Counter()
    for combo in product(*choices):
        rotations: Dict[str, List[str]] = {labels[0]: fixed}
        rotations.update(zip(labels[1:], combo))
        fs = trace_faces(RotationSystem.from_neighbor_rotations(rotations))
        tally[vector_key(fs.face_vector())] += 1
    return tally


def count_embeddings(n: int, genus: int) -> int:
    faces = euler_face_count(n, genus)
    return sum(count for key, count in brute_force_face_vectors(n).items() if len(key.split()) == faces)
