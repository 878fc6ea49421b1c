import os
import sys
from pathlib import Path

import pytest

# Add src to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from prismatic.current import derive, parse_log  # noqa: E402
from prismatic.embedding import RotationSystem, parse_embedding, trace_faces  # noqa: E402
from prismatic.models import SearchSpec  # noqa: E402
from prismatic.prism import faces_by_labels  # noqa: E402
from prismatic.search import search_patchworks  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"

Z19_LOG = "m=19 index=1\ncircuit 0: 15 x 4 11 5 y 14 6 16 18 z 1 17 10 13 8 12 2 3 9 7\n"
K7_LOG = "m=7 index=1\ncircuit 0: 1 3 2 6 4 5\n"

OCTAHEDRON = """
u: 1 2 3 4
v: 4 3 2 1
1: u 4 v 2
2: u 1 v 3
3: u 2 v 4
4: u 3 v 1
"""


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def k3() -> RotationSystem:
    return parse_embedding("a: b c\nb: c a\nc: a b\n")


@pytest.fixture
def k4_planar() -> RotationSystem:
    return parse_embedding("1: 2 3 4\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n")


@pytest.fixture
def k7_torus() -> RotationSystem:
    return derive(parse_log(K7_LOG))


@pytest.fixture
def octahedron() -> RotationSystem:
    return parse_embedding(OCTAHEDRON)


@pytest.fixture
def z19_log():
    return parse_log(Z19_LOG)


@pytest.fixture(scope="session")
def k8_patchwork():
    """Genus-2 K8 with a cotriangular patchwork of two quadrilaterals"""
    report = search_patchworks(SearchSpec(n=8, genus=2, shapes=["4,4"], max_findings=1, split_depth=0))
    (finding,) = report.findings
    rs = parse_embedding(finding.embedding)
    return rs, tuple(faces_by_labels(trace_faces(rs), finding.cover))


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv("PRISMATIC_THREADS", "1")
