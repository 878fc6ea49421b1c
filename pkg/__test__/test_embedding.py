import random

import pytest

from prismatic.embedding import (
    RotationSystem,
    euler_genus,
    mirror,
    normalize,
    parse_embedding,
    read_embedding,
    serialize_embedding,
    trace_faces,
    write_embedding,
)
from prismatic.errors import EmbeddingFormatError, InvalidEmbeddingError


def test_k3_sphere(k3):
    fs = trace_faces(k3)
    assert fs.counts == (3, 3, 2, 0)
    assert fs.is_triangular()
    assert [face.vertices for face in fs.faces] == [("a", "b", "c"), ("b", "a", "c")]


def test_k4_planar(k4_planar):
    fs = trace_faces(k4_planar)
    assert fs.counts == (4, 6, 4, 0)
    assert fs.face_vector() == (3, 3, 3, 3)
    assert k4_planar.is_complete()


def test_k7_torus(k7_torus):
    fs = trace_faces(k7_torus)
    assert fs.counts == (7, 21, 14, 1)
    assert fs.is_triangular()


def test_every_arc_on_exactly_one_face(k7_torus):
    fs = trace_faces(k7_torus)
    arcs = sorted(d for face in fs.faces for d in face.arcs)
    assert arcs == list(range(k7_torus.num_darts))
    for k, face in enumerate(fs.faces):
        for d in face.arcs:
            assert fs.face_of_arc(d) == k


def test_corner_labels_are_arc_tails(k4_planar):
    for face in trace_faces(k4_planar).faces:
        assert face.vertices == tuple(k4_planar.tail(d) for d in face.arcs)
        for i in range(face.sides):
            assert k4_planar.succ(face.corner_anchor(i)) == face.arcs[i]


def test_parallel_edges_trace_digons():
    rs = parse_embedding("a: b b#2\nb: a#2 a\n")
    fs = trace_faces(rs)
    assert fs.counts == (2, 2, 2, 0)
    assert fs.face_vector() == (2, 2)
    assert not rs.is_simple()


def test_lone_vertex_has_one_face():
    rs = parse_embedding("a:\n")
    fs = trace_faces(rs)
    assert fs.counts == (1, 0, 1, 0)


def test_rotation_start_does_not_matter(k4_planar):
    shifted = parse_embedding("4: 3 2 1\n3: 2 4 1\n2: 3 1 4\n1: 4 2 3\n")
    assert shifted == k4_planar
    assert hash(shifted) == hash(k4_planar)


def test_mirror_is_a_different_embedding(k4_planar):
    flipped = mirror(k4_planar)
    assert flipped != k4_planar
    assert mirror(flipped) == k4_planar
    assert trace_faces(flipped).genus == 0


def test_normalize_is_idempotent():
    text = "# K4\n4: 1 3 2\n1: 3 4 2   # start anywhere\n3: 4 1 2\n2: 1 4 3\n"
    once = normalize(text)
    assert normalize(once) == once
    assert once.splitlines()[0] == "1: 2 3 4"


def test_serialize_parallel_edges_round_trip():
    text = "a: b b#2 c\nb: a#2 a c\nc: a b\n"
    rs = parse_embedding(text)
    assert parse_embedding(serialize_embedding(rs)) == rs


def test_write_and_read(tmp_path, k7_torus):
    path = write_embedding(k7_torus, tmp_path / "k7.emb")
    assert read_embedding(path) == k7_torus


def test_relabel_keeps_genus(k7_torus):
    mapping = {str(i): f"v{i}" for i in range(7)}
    renamed = k7_torus.relabel(mapping)
    assert trace_faces(renamed).genus == 1
    assert set(renamed.vertices) == set(mapping.values())


def test_relabel_refuses_merging(k3):
    with pytest.raises(InvalidEmbeddingError):
        k3.relabel({"a": "b"})


def test_dangling_edge_end():
    with pytest.raises(EmbeddingFormatError, match="dangling"):
        parse_embedding("a: b c\nb: a\nc: b\n")


def test_unknown_neighbor():
    with pytest.raises(EmbeddingFormatError, match="line 1"):
        parse_embedding("a: z\n")


def test_duplicate_vertex_line():
    with pytest.raises(EmbeddingFormatError) as info:
        parse_embedding("a: b\na: b\nb: a\n")
    assert info.value.line == 2


def test_duplicate_arc_end():
    with pytest.raises(EmbeddingFormatError, match="duplicate arc-end"):
        parse_embedding("a: b b\nb: a\n")


def test_currents_rejected_in_embedding_files():
    with pytest.raises(EmbeddingFormatError, match="currents"):
        parse_embedding("a: b[+1]\nb: a[-1]\n")


def test_empty_file():
    with pytest.raises(EmbeddingFormatError):
        parse_embedding("# nothing here\n")


def test_constructor_checks_darts():
    with pytest.raises(InvalidEmbeddingError):
        RotationSystem(("a", "b"), (("a", "b"),), ((0,), ()))


def test_data_files_parse(data_dir):
    assert trace_faces(read_embedding(data_dir / "k3.emb")).counts == (3, 3, 2, 0)
    assert trace_faces(read_embedding(data_dir / "k4_planar.emb")).counts == (4, 6, 4, 0)


def test_euler_genus(k7_torus, k4_planar):
    assert euler_genus(trace_faces(k7_torus)) == 1
    assert euler_genus(trace_faces(k4_planar)) == 0


def _random_rows(rng):
    n = rng.randrange(3, 9)
    names = [f"v{i}" for i in range(n)]
    rows = {}
    for v in names:
        others = [w for w in names if w != v]
        rng.shuffle(others)
        rows[v] = others
    return rows


def _scrambled(rng, rows):
    lines = []
    for v, row in rows.items():
        k = rng.randrange(len(row))
        line = f"{v}:{' ' * rng.randint(1, 3)}" + " ".join(row[k:] + row[:k])
        if rng.random() < 0.3:
            line += "  # noise"
        lines.append(line)
    rng.shuffle(lines)
    if rng.random() < 0.5:
        lines.insert(rng.randrange(len(lines) + 1), "")
    return "\n".join(lines) + "\n"


@pytest.mark.parametrize("seed", range(40))
def test_random_text_round_trip(seed):
    rng = random.Random(seed)
    rows = _random_rows(rng)
    canonical = normalize("".join(f"{v}: {' '.join(row)}\n" for v, row in rows.items()))
    text = _scrambled(rng, rows)
    assert serialize_embedding(parse_embedding(text)) == normalize(text) == canonical
    assert normalize(canonical) == canonical


@pytest.mark.parametrize("seed", range(40))
def test_mirror_keeps_face_lengths(seed):
    rs = parse_embedding(_scrambled(random.Random(seed), _random_rows(random.Random(seed))))
    fs, flipped = trace_faces(rs), trace_faces(mirror(rs))
    assert sorted(flipped.face_vector()) == sorted(fs.face_vector())
    assert flipped.genus == fs.genus
