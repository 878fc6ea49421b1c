"""Genus formulas for the prism graphs K_n x K_2."""

from typing import List

import numpy as np

from ..errors import PrismaticError
from ..models import FormulaRow

EXCEPTIONS = frozenset({5, 9})


def _check(n: int) -> None:
    if n < 2:
        raise PrismaticError(f"n must be at least 2, got {n}")


def lower_bound(n: int) -> int:
    """ceil((n-2)(n-3)/6)"""
    _check(n)
    return max(0, -(-((n - 2) * (n - 3)) // 6))


def genus_formula(n: int) -> int:
    return lower_bound(n) + (1 if n in EXCEPTIONS else 0)


def snug_genus(n: int) -> int:
    """Genus of a snug embedding; only integral when 6 divides (n-2)(n-3)"""
    _check(n)
    twice = (n - 2) * (n - 3)
    if twice % 6:
        raise PrismaticError(f"K_{n} x K_2 has no snug embedding: (n-2)(n-3)/6 is not an integer")
    return twice // 6


def snug_face_count(n: int) -> int:
    """(2n^2 - n)/3 faces"""
    return (2 * n * n - n) // 3


def ringel_single_handle_genus(n: int) -> int:
    """2 ceil((n-2)(n-3)/12): prism genus reached from a vertex-deleted K_{n+1} genus embedding"""
    _check(n)
    return 2 * -(-((n - 2) * (n - 3)) // 12)


def genus_table(n_max: int) -> List[FormulaRow]:
    """Formula and bound for every n in 2..n_max"""
    _check(n_max)
    n = np.arange(2, n_max + 1, dtype=np.int64)
    bound = -((-(n - 2) * (n - 3)) // 6)
    bound = np.maximum(bound, 0)
    exception = np.isin(n, sorted(EXCEPTIONS))
    genus = bound + exception.astype(np.int64)
    return [
        FormulaRow(n=int(k), lower_bound=int(b), genus=int(g), exception=bool(x))
        for k, b, g, x in zip(n, bound, genus, exception)
    ]
