import pytest

from prismatic.current import (
    attach_vortices,
    check_index1,
    check_index3,
    derive,
    derive_with_vortices,
    format_current_graph,
    format_log,
    parse_current_graph,
    parse_log,
    read_current_graph,
    read_log,
    trace_circuits,
    vortex_faces,
)
from prismatic.embedding import trace_faces
from prismatic.errors import CurrentGraphError, EmbeddingFormatError, PrincipleError
from prismatic.models import PrincipleStatus

EDGE_Z3 = "m=3\na: b[+1]\nb: a[-1]\nvortex a x\nvortex b y\n"
THETA_Z3 = "m=3\na: b[+1] b#2[+1] b#3[+1]\nb: a[-1] a#3[-1] a#2[-1]\n"


def statuses(report):
    return {r.name: r.status for r in report.results}


def test_z19_log_derives_k19(z19_log):
    rs = derive(z19_log)
    fs = trace_faces(rs)
    assert rs.is_complete()
    assert fs.counts == (19, 171, 98, 28)
    assert fs.lengths[3] == 95
    assert fs.lengths[19] == 3


def test_z19_vortex_faces_are_distinct_hamiltonian_faces(z19_log):
    rs = derive(z19_log)
    fs = trace_faces(rs)
    matched = vortex_faces(rs, z19_log)
    assert sorted(matched) == ["x", "y", "z"]
    assert len(set(matched.values())) == 3
    for k in matched.values():
        assert fs.faces[k].sides == 19
        assert len(fs.faces[k].vertex_set()) == 19


def test_z19_attach_gives_k22_minus_k3(z19_log):
    rs = derive_with_vortices(z19_log)
    fs = trace_faces(rs)
    assert fs.counts == (22, 228, 152, 28)
    assert fs.is_triangular()
    for letter in "xyz":
        assert rs.degree(letter) == 19
    assert not rs.edges_between("x", "y")


def test_z19_principles(z19_log):
    report = check_index1(z19_log)
    assert statuses(report) == {
        "A1": PrincipleStatus.NOT_CHECKABLE,
        "A2": PrincipleStatus.PASS,
        "A3": PrincipleStatus.NOT_CHECKABLE,
        "A4": PrincipleStatus.NOT_CHECKABLE,
    }
    assert report.passed


def test_k7_torus_log():
    rs = derive(parse_log("m=7 index=1\ncircuit 0: 1 3 2 6 4 5\n"))
    assert trace_faces(rs).counts == (7, 21, 14, 1)


def test_k10_minus_k3(data_dir):
    log = read_log(data_dir / "k10_minus_k3.log")
    fs = trace_faces(derive_with_vortices(log))
    assert fs.counts == (10, 42, 28, 3)
    assert fs.is_triangular()


def test_printed_layout_and_negative_currents():
    log = parse_log("m=7\n[0]. -6 3 2 6 4 5\n")
    assert log.circuits == ((1, 3, 2, 6, 4, 5),)


def test_format_log_round_trip(z19_log):
    assert parse_log(format_log(z19_log)) == z19_log


def test_zero_current_rejected():
    with pytest.raises(EmbeddingFormatError, match="line 2"):
        parse_log("m=7\ncircuit 0: 1 7 2\n")


def test_index_header_must_match():
    with pytest.raises(EmbeddingFormatError, match="index=2"):
        parse_log("m=7 index=2\ncircuit 0: 1 2 3\n")


def test_repeated_letter_rejected():
    with pytest.raises(EmbeddingFormatError, match="repeats"):
        parse_log("m=7\ncircuit 0: 1 x 2 x 3\n")


def test_missing_modulus():
    with pytest.raises(EmbeddingFormatError, match="m="):
        parse_log("circuit 0: 1 2 3\n")


def test_edge_graph_traces_one_circuit():
    cg = parse_current_graph(EDGE_Z3)
    log = trace_circuits(cg)
    assert log.modulus == 3
    assert log.circuits == ((1, "y", 2, "x"),)
    assert cg.vortices() == ["a", "b"]


def test_edge_graph_principles_pass():
    cg = parse_current_graph(EDGE_Z3)
    report = check_index1(trace_circuits(cg), cg)
    assert all(r.status == PrincipleStatus.PASS for r in report.results)


def test_edge_graph_derives_k5_minus_k2():
    log = trace_circuits(parse_current_graph(EDGE_Z3))
    base = derive(log)
    assert trace_faces(base).counts == (3, 3, 2, 0)
    rs = attach_vortices(base, log)
    assert trace_faces(rs).counts == (5, 9, 6, 0)
    assert not rs.edges_between("x", "y")


def test_a4_fails_when_excess_does_not_generate():
    cg = parse_current_graph("m=4\na: b[+2]\nb: a[-2]\nvortex a x\nvortex b y\n")
    report = check_index1(trace_circuits(cg), cg)
    found = statuses(report)
    assert found["A4"] == PrincipleStatus.FAIL
    assert found["A2"] == PrincipleStatus.FAIL
    assert not report.passed
    assert report.result("A4").witness


def test_index1_needs_one_circuit():
    cg = parse_current_graph(THETA_Z3)
    with pytest.raises(PrincipleError):
        check_index1(trace_circuits(cg), cg)


def test_theta_index3_principles(data_dir):
    cg = read_current_graph(data_dir / "theta_z3.cgr")
    assert trace_circuits(cg).index == 3
    report = check_index3(cg)
    assert all(r.status == PrincipleStatus.PASS for r in report.results)


def test_theta_derives_k3():
    log = trace_circuits(parse_current_graph(THETA_Z3))
    assert trace_faces(derive(log)).counts == (3, 3, 2, 0)


def test_index3_numbering_must_be_a_permutation():
    cg = parse_current_graph(THETA_Z3)
    with pytest.raises(PrincipleError):
        check_index3(cg, [0, 0, 1])


def test_index3_renumbering_breaks_b4():
    report = check_index3(parse_current_graph(THETA_Z3), [1, 0, 2])
    assert statuses(report)["B4"] == PrincipleStatus.FAIL
    assert statuses(report)["B2"] == PrincipleStatus.PASS
    assert any(w.startswith("a->b") and "current 1" in w for w in report.result("B4").witness)


@pytest.mark.parametrize("third, passes", [(1, True), (3, False)])
def test_index3_vortex_excess(third, passes):
    # excess of a is 2 + third over Z6; it must generate the subgroup <3>
    cg = parse_current_graph(f"m=6\na: b[+1] b#2[+1] b#3[+{third}]\nb: a[-1] a#3[-{third}] a#2[-1]\n")
    assert cg.vortices() == ["a", "b"]
    report = check_index3(cg)
    assert (statuses(report)["B3"] == PrincipleStatus.PASS) is passes
    if not passes:
        assert any("a has excess 5" in w for w in report.result("B3").witness)


def test_currents_must_be_opposite():
    with pytest.raises(EmbeddingFormatError, match="opposite"):
        parse_current_graph("m=3\na: b[+1]\nb: a[+1]\n")


def test_kcl_vertex_cannot_be_a_vortex():
    with pytest.raises(EmbeddingFormatError, match="KCL"):
        parse_current_graph(THETA_Z3 + "vortex a x\n")


def test_current_graph_round_trip():
    cg = parse_current_graph(EDGE_Z3)
    again = parse_current_graph(format_current_graph(cg))
    assert again.rs == cg.rs
    assert trace_circuits(again) == trace_circuits(cg)


def test_letters_need_hamiltonian_faces():
    log = parse_log("m=7\ncircuit 0: 1 x 3 2 6 4 5\n")
    with pytest.raises(CurrentGraphError):
        vortex_faces(derive(log), log)
