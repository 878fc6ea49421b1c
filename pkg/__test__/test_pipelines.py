import pytest

from prismatic.current import derive_with_vortices, read_log
from prismatic.embedding import (
    add_edge_across_faces,
    contract_edge,
    delete_edge,
    delete_vertex,
    parse_embedding,
    subdivide_face,
    trace_faces,
)
from prismatic.errors import EmbeddingFormatError, PrismaticError, ScriptError, SurgeryError
from prismatic.pipelines import (
    Step,
    find_hexagon_completion,
    finish_from_target,
    format_script,
    hexagon_vertex,
    parse_script,
    read_script,
    run_pipeline_c9,
    run_script,
    theorem_c9_target_check,
)
from prismatic.pipelines.c9 import _moves, _priority
from prismatic.prism import attach_uv, snug_genus


@pytest.fixture
def k10_minus_k3(data_dir):
    return derive_with_vortices(read_log(data_dir / "k10_minus_k3.log"))


@pytest.fixture
def hexagon_target(octahedron):
    fs = trace_faces(octahedron)
    top = next(k for k, face in enumerate(fs.faces) if face.vertex_set() == {"u", "1", "2"})
    bottom = next(k for k, face in enumerate(fs.faces) if face.vertex_set() == {"v", "3", "4"})
    handled = add_edge_across_faces(
        octahedron, top, fs.faces[top].corners_at("u")[0], bottom, fs.faces[bottom].corners_at("v")[0]
    )
    return contract_edge(handled, handled.find_edge("u", "v"))


# ---------------------------------------------------------------------------
# scripts


def test_parse_script_skips_comments():
    steps = parse_script("# warm up\nflip a b\n\naddhandle f1 0 f7 2  # across\nsplit w f0\n")
    assert steps == [
        Step("flip", ("a", "b")),
        Step("addhandle", ("f1", "0", "f7", "2")),
        Step("split", ("w", "f0")),
    ]
    assert parse_script(format_script(steps)) == steps


def test_unknown_step():
    with pytest.raises(EmbeddingFormatError, match="line 1"):
        parse_script("twist a b\n")


def test_wrong_arity():
    with pytest.raises(EmbeddingFormatError, match="line 2"):
        parse_script("# one\nflip a\n")


def test_run_script_audit(data_dir, k4_planar):
    run = run_script(k4_planar, read_script(data_dir / "k4_subdivide.script"))
    assert [entry.op for entry in run.audit] == ["start", "subdivide f0 x", "subdivide f1 y"]
    assert run.audit[1].expected_delta == [1, 3, 2, 0]
    assert trace_faces(run.result).counts == (6, 12, 8, 0)
    assert run.result.has_vertex("x") and run.result.has_vertex("y")


def test_failing_step_reports_state(k3):
    with pytest.raises(ScriptError) as info:
        run_script(k3, [Step("flip", ("a", "b"))])
    assert info.value.step == 1
    assert info.value.state == (3, 3, 2, 0)


def test_bad_face_token(k3):
    with pytest.raises(ScriptError, match="face"):
        run_script(k3, [Step("subdivide", ("top", "x"))])


def test_delete_parallel_copy():
    rs = parse_embedding("a: b b#2 c\nb: a#2 a c\nc: a b\n")
    run = run_script(rs, [Step("del", ("a", "b#2"))])
    assert run.result.is_simple()
    assert trace_faces(run.result).counts == (3, 3, 2, 0)


# ---------------------------------------------------------------------------
# hexagon targets


def test_target_check(hexagon_target, k4_planar):
    assert theorem_c9_target_check(hexagon_target)
    assert not theorem_c9_target_check(k4_planar)
    w, k = hexagon_vertex(hexagon_target)
    assert w == "u"
    assert trace_faces(hexagon_target).faces[k].sides == 6


def test_finish_needs_split_complete_result(hexagon_target):
    # splitting gives back the octahedron, where u and v share neighbors
    ledger = {}
    with pytest.raises(SurgeryError, match="split-complete"):
        finish_from_target(hexagon_target, ledger)
    assert ledger["split"] == 0


# ---------------------------------------------------------------------------
# completion search


def test_k10_minus_k3_start(k10_minus_k3):
    fs = trace_faces(k10_minus_k3)
    assert fs.counts == (10, 42, 28, 3)
    assert fs.is_triangular()


def test_zero_budget(k10_minus_k3):
    found = find_hexagon_completion(k10_minus_k3, budget=0)
    assert not found.found
    assert found.explored == 0


def test_tiny_budget_exhausts(k10_minus_k3):
    # one step adds at most one of the three missing edges
    result = run_pipeline_c9(k10_minus_k3, budget=5)
    assert result.status == "exhausted"
    assert result.explored == 5
    assert result.ledger == {"start": 3}
    assert result.prism is None


def test_handle_moves_pair_every_face(k10_minus_k3):
    # each special vertex of K10 - K3 sits on seven triangles
    fs = trace_faces(k10_minus_k3)
    handles = [step for step in _moves(k10_minus_k3, fs, ("x", "y", "z"), False) if step.op == "addhandle"]
    assert len(handles) == 3 * 7 * 7
    assert len(set(handles)) == len(handles)
    assert not [step for step in _moves(k10_minus_k3, fs, ("x", "y", "z"), True) if step.op == "addhandle"]


def test_edge_defects_rank_before_open_faces(k4_planar):
    fs = trace_faces(k4_planar)
    # K5 minus an edge, triangular in the plane
    almost = subdivide_face(k4_planar, 0, "5")
    # K4 on the torus, complete but with two open faces
    opened = delete_edge(k4_planar, k4_planar.find_edge("1", "2"))
    ofs = trace_faces(opened)
    at_1 = next(k for k, face in enumerate(ofs.faces) if "1" in face.vertex_set() and "2" not in face.vertex_set())
    at_2 = next(k for k, face in enumerate(ofs.faces) if "2" in face.vertex_set() and "1" not in face.vertex_set())
    torus = add_edge_across_faces(
        opened, at_1, ofs.faces[at_1].corners_at("1")[0], at_2, ofs.faces[at_2].corners_at("2")[0]
    )
    tfs = trace_faces(torus)
    assert tfs.genus == 1 and not tfs.is_triangular()
    assert trace_faces(almost).is_triangular()
    assert _priority(torus, tfs) < _priority(almost, trace_faces(almost))
    assert _priority(k4_planar, fs)[:3] == (0, 0, 0)


def test_same_seed_same_search(k10_minus_k3):
    one = find_hexagon_completion(k10_minus_k3, budget=40, seed=3)
    two = find_hexagon_completion(k10_minus_k3, budget=40, seed=3)
    assert one.explored == two.explored
    assert one.script == two.script


def test_specials_must_be_distinct(k10_minus_k3):
    with pytest.raises(PrismaticError, match="distinct"):
        find_hexagon_completion(k10_minus_k3, ("x", "x", "y"))


def test_specials_must_not_be_adjacent(k10_minus_k3):
    with pytest.raises(PrismaticError, match="adjacent"):
        find_hexagon_completion(k10_minus_k3, ("x", "y", "1"))


def test_start_must_be_triangular(k7_torus):
    k6 = delete_vertex(k7_torus, "0")
    with pytest.raises(PrismaticError, match="triangular"):
        find_hexagon_completion(k6, ("1", "2", "3"))


@pytest.mark.slow
def test_k22_minus_k3_pipeline(z19_log):
    rs = derive_with_vortices(z19_log)
    result = run_pipeline_c9(rs, budget=3000)
    if result.status == "exhausted":
        pytest.skip("no completion within the budget")
    assert result.status == "snug"
    assert result.snug.genus == snug_genus(21) == 57
    assert result.ledger["start"] == 28
    assert result.ledger["completed"] == 29


def test_k8_target_finishes_to_a_snug_prism(k8_patchwork):
    rs, patch = k8_patchwork
    attached = attach_uv(rs, patch)
    fs = trace_faces(attached)
    at_u = next(k for k, face in enumerate(fs.faces) if "u" in face.vertex_set())
    at_v = next(k for k, face in enumerate(fs.faces) if "v" in face.vertex_set())
    handled = add_edge_across_faces(
        attached, at_u, fs.faces[at_u].corners_at("u")[0], at_v, fs.faces[at_v].corners_at("v")[0]
    )
    target = contract_edge(handled, handled.find_edge("u", "v"))
    assert trace_faces(target).counts == (9, 36, 23, 3)
    assert theorem_c9_target_check(target)

    ledger = {}
    prism, report = finish_from_target(target, ledger)
    assert ledger == {"split": 2, "delete_uv": 2, "prism": 5}
    assert report.snug, report.witness
    assert report.genus == snug_genus(8)
    assert trace_faces(prism).counts[:2] == (16, 64)
