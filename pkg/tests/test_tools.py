import pytest
from hypothesis import given, settings

from arboreal.errors import InvalidEmbeddingError, NotACycleInFileError, ParseError
from arboreal.spanning import enumerate_spanning_trees
from arboreal.tools import (
    parse_cycle_file,
    parse_graph_file,
    read_cycle_file,
    read_graph_file,
    serialize_cycles,
    serialize_graph,
    tree_graph_to_dot,
)
from arboreal.treegraph import ALL, build_tree_graph

from .strategies import graphs

TRIANGLE = """\
# a triangle
V 3
E 0 1
E 1 2   # second edge
E 2 0
"""


def test_parse_graph_file():
    parsed = parse_graph_file(TRIANGLE)
    assert parsed.plane is None
    assert parsed.graph.vertex_count == 3
    assert parsed.graph.edges == ((0, 1), (1, 2), (2, 0))


def test_plane_graph_round_trip(octa):
    text = serialize_graph(octa.graph, octa)
    assert text.splitlines()[13] == "F " + " ".join(map(str, octa.faces[octa.outer_face].ids()))
    parsed = parse_graph_file(text)
    assert parsed.graph.edges == octa.graph.edges
    assert parsed.plane.faces == octa.faces
    assert parsed.plane.outer_face == octa.outer_face
    assert serialize_graph(parsed.graph, parsed.plane) == text


def test_files_on_disk(tmp_path, octa, family):
    graph_path = tmp_path / "g0.txt"
    cycles_path = tmp_path / "c0.txt"
    graph_path.write_text(serialize_graph(octa.graph, octa))
    cycles_path.write_text(serialize_cycles(list(family)))
    parsed = read_graph_file(graph_path)
    assert read_cycle_file(cycles_path, parsed.graph) == list(family)


@pytest.mark.parametrize("text, line", [
    ("E 0 1\n", 1),
    ("V 3\nV 3\n", 2),
    ("V 3\nE 0 x\n", 2),
    ("V 3\nE 0 3\n", 2),
    ("V 3\nE 1 1\n", 2),
    ("V 3\nE 0 1\n# dup\nE 1 0\n", 4),
    ("V 3\nE 0 1 2\n", 2),
    ("V 3\nX 1\n", 2),
    ("V 3\nE 0 1\nE 1 2\nE 2 0\nF 0 1 2\nE 0 2\n", 6),
    ("V 3\nE 0 1\nE 1 2\nE 2 0\nF 0 1 5\n", 5),
    ("V 3\nE 0 1\nE 1 2\nE 2 0\nF 0 0 1\n", 5),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_graph_file(text)
    assert excinfo.value.line == line
    assert f"line {line}" in str(excinfo.value)


def test_missing_vertex_line():
    with pytest.raises(ParseError) as excinfo:
        parse_graph_file("# nothing here\n")
    assert excinfo.value.line is None


def test_invalid_faces_rejected():
    with pytest.raises(InvalidEmbeddingError):
        parse_graph_file(TRIANGLE + "F 0 1 2\n")


def test_cycle_file(triangle):
    assert parse_cycle_file("# the triangle\n2 0 1\n", triangle) == [triangle.full_set()]
    assert serialize_cycles([triangle.full_set()]) == "0 1 2\n"
    with pytest.raises(NotACycleInFileError) as excinfo:
        parse_cycle_file("0 1 2\n\n0 1\n", triangle)
    assert excinfo.value.line == 3
    with pytest.raises(ParseError):
        parse_cycle_file("0 3\n", triangle)


def test_undecodable_files(tmp_path, triangle):
    graph_path = tmp_path / "g.txt"
    cycles_path = tmp_path / "c.txt"
    graph_path.write_bytes(b"V 3\nE 0 1\xff\n")
    cycles_path.write_bytes(b"0 1 2\n\xfe\n")
    with pytest.raises(ParseError) as excinfo:
        read_graph_file(graph_path)
    assert "byte 9" in str(excinfo.value)
    with pytest.raises(ParseError):
        read_cycle_file(cycles_path, triangle)


def test_dot_export(triangle):
    tg = build_tree_graph(triangle, enumerate_spanning_trees(triangle), ALL)
    dot = tree_graph_to_dot(tg)
    lines = dot.splitlines()
    assert lines[0] == "graph T {"
    assert lines[-1] == "}"
    assert '  t0 [label="{0 1}", component=0];' in lines
    assert sum(1 for line in lines if "[label=" in line) == 3
    assert sum(1 for line in lines if " -- " in line) == 3


@settings(max_examples=100)
@given(graphs(max_vertices=7))
def test_graph_serialization_round_trip(g):
    parsed = parse_graph_file(serialize_graph(g))
    assert parsed.graph.vertex_count == g.vertex_count
    assert parsed.graph.edges == g.edges
