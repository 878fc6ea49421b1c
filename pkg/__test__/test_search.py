import json

import pytest
from pydantic import ValidationError

from prismatic.embedding import parse_embedding, trace_faces
from prismatic.errors import CheckpointError, SearchError
from prismatic.models import SearchSpec, SearchStatus
from prismatic.prism import faces_by_labels, is_facial_cover
from prismatic.search import (
    PrefixResult,
    Shape,
    brute_force_face_vectors,
    count_embeddings,
    face_vector_candidates,
    format_vector,
    search_patchworks,
    split_budget,
)
from prismatic.search.face_vectors import euler_face_count

# ---------------------------------------------------------------------------
# face vectors and shapes


def test_candidates_for_k9_genus_3():
    vectors = face_vector_candidates(9, 3)
    assert [format_vector(v) for v in vectors] == ["3^22 6", "3^21 4 5", "3^20 4^3"]
    assert all(sum(v) == 72 and len(v) == 23 for v in vectors)


def test_candidates_filtered_by_shape():
    shape = Shape.parse("5,4")
    assert shape.lengths == (4, 5)
    assert str(shape) == "4,5"
    assert [format_vector(v) for v in face_vector_candidates(9, 3, [shape])] == ["3^21 4 5"]


def test_triangular_genus_has_one_candidate():
    assert face_vector_candidates(7, 1) == [(3,) * 14]
    assert face_vector_candidates(5, 0) == []


def test_cover_shape_admits_enough_faces():
    shape = Shape.parse("cover:2")
    assert shape.cover_size == 2
    assert shape.admits((3, 3))
    assert not shape.admits((6,))


@pytest.mark.parametrize("text", ["cover:0", "2,4", "four", ""])
def test_bad_shapes(text):
    with pytest.raises(SearchError):
        Shape.parse(text)


def test_spec_rejects_infeasible_genus():
    with pytest.raises(ValidationError):
        SearchSpec(n=4, genus=2)


def test_split_budget():
    assert split_budget(10, 4) == [3, 3, 2, 2]
    assert split_budget(None, 2) == [None, None]
    assert sum(split_budget(7, 20)) == 7


# ---------------------------------------------------------------------------
# brute force


@pytest.mark.parametrize(
    "n, genus, count",
    [(3, 0, 1), (4, 0, 1), (4, 1, 7), (5, 0, 0), (5, 1, 77), (5, 2, 829), (5, 3, 390)],
)
def test_embedding_counts(n, genus, count):
    assert count_embeddings(n, genus) == count


def test_brute_force_limit():
    with pytest.raises(SearchError):
        brute_force_face_vectors(7)


# ---------------------------------------------------------------------------
# backtracking against brute force


def _expected(n, genus):
    faces = euler_face_count(n, genus)
    return {key: count for key, count in brute_force_face_vectors(n).items() if len(key.split()) == faces}


@pytest.mark.parametrize("n, genus", [(3, 0), (4, 0), (4, 1), (5, 1), (5, 2), (5, 3)])
def test_search_matches_brute_force(n, genus):
    report = search_patchworks(SearchSpec(n=n, genus=genus))
    assert report.status == SearchStatus.COMPLETE
    assert report.face_vectors == _expected(n, genus)
    assert report.prefixes_done == report.prefixes_total


@pytest.mark.parametrize("split_depth", [0, 1, 5])
def test_split_depth_does_not_change_the_tally(split_depth):
    report = search_patchworks(SearchSpec(n=5, genus=2, split_depth=split_depth))
    assert report.face_vectors == _expected(5, 2)


def test_audit_finds_nothing_in_pruned_branches():
    plain = search_patchworks(SearchSpec(n=5, genus=1))
    audited = search_patchworks(SearchSpec(n=5, genus=1, audit=True))
    assert audited.status == SearchStatus.COMPLETE
    assert audited.face_vectors == plain.face_vectors
    assert audited.nodes >= plain.nodes


def test_no_candidates_is_complete_and_empty():
    report = search_patchworks(SearchSpec(n=5, genus=0))
    assert report.status == SearchStatus.COMPLETE
    assert report.nodes == 0
    assert report.face_vectors == {}


def test_budget_exhaustion():
    report = search_patchworks(SearchSpec(n=5, genus=2, budget=10))
    assert report.status == SearchStatus.BUDGET_EXHAUSTED
    assert report.nodes <= 10


# ---------------------------------------------------------------------------
# findings


def test_k4_planar_covers():
    report = search_patchworks(SearchSpec(n=4, genus=0, shapes=["cover:2"]))
    assert report.status == SearchStatus.COMPLETE
    assert len(report.findings) == 6


def test_max_findings_stops_early():
    report = search_patchworks(SearchSpec(n=4, genus=0, shapes=["cover:2"], max_findings=2))
    assert report.status == SearchStatus.STOPPED
    assert len(report.findings) == 2
    for finding in report.findings:
        rs = parse_embedding(finding.embedding)
        fs = trace_faces(rs)
        assert fs.genus == 0
        assert list(fs.face_vector()) == finding.face_vector
        assert is_facial_cover(fs, faces_by_labels(fs, finding.cover))


def test_lone_hexagon_does_not_fit_a_toroidal_k5():
    # 3^4 6 has only 18 sides
    report = search_patchworks(SearchSpec(n=5, genus=1, shapes=["6"]))
    assert report.status == SearchStatus.COMPLETE
    assert report.nodes == 0
    assert report.findings == []


# ---------------------------------------------------------------------------
# checkpoints


def test_checkpoint_resume(tmp_path):
    path = tmp_path / "k5.json"
    spec = SearchSpec(n=5, genus=2, checkpoint=str(path), split_depth=2)
    first = search_patchworks(spec)
    assert path.exists()

    again = search_patchworks(spec)
    assert again.face_vectors == first.face_vectors
    assert again.nodes == first.nodes

    data = json.loads(path.read_text())
    assert len(data["done"]) == first.prefixes_total
    data["done"] = {k: v for k, v in data["done"].items() if int(k) % 2}
    path.write_text(json.dumps(data))
    resumed = search_patchworks(spec)
    assert resumed.face_vectors == first.face_vectors
    assert resumed.nodes == first.nodes
    assert len(json.loads(path.read_text())["done"]) == first.prefixes_total


def test_checkpoint_for_other_parameters(tmp_path):
    path = tmp_path / "k5.json"
    search_patchworks(SearchSpec(n=5, genus=2, checkpoint=str(path)))
    with pytest.raises(CheckpointError):
        search_patchworks(SearchSpec(n=5, genus=3, checkpoint=str(path)))


def test_checkpoint_entries_are_prefix_results(tmp_path):
    path = tmp_path / "k4.json"
    report = search_patchworks(SearchSpec(n=4, genus=1, checkpoint=str(path), split_depth=1))
    data = json.loads(path.read_text())
    results = [PrefixResult.model_validate(entry) for entry in data["done"].values()]
    assert sum(r.nodes for r in results) == report.nodes

    first = next(iter(data["done"]))
    data["done"][first]["nodes"] = "many"
    path.write_text(json.dumps(data))
    with pytest.raises(CheckpointError, match="unreadable"):
        search_patchworks(SearchSpec(n=4, genus=1, checkpoint=str(path), split_depth=1))


def test_unreadable_checkpoint(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(CheckpointError):
        search_patchworks(SearchSpec(n=4, genus=1, checkpoint=str(path)))


def test_threads_do_not_change_the_result():
    one = search_patchworks(SearchSpec(n=5, genus=3))
    two = search_patchworks(SearchSpec(n=5, genus=3, threads=2))
    assert two.face_vectors == one.face_vectors
    assert two.nodes == one.nodes


@pytest.mark.slow
def test_budgeted_k9_genus_3_finds_no_patchwork():
    spec = SearchSpec(n=9, genus=3, shapes=["4,4,4", "4,5", "6"], budget=200_000, split_depth=4)
    report = search_patchworks(spec)
    assert report.findings == []
    assert report.nodes <= 200_000
