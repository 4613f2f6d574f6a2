import pytest
from hypothesis import given, strategies as st

from directed_quantum_walk.line_graph.Directed_Graph import Directed_Graph
from directed_quantum_walk.line_graph.Line_With_Loops_Specification import Line_With_Loops_Specification, build_line_with_loops, interior_vertices
from directed_quantum_walk.line_graph.Realizability_Report import Vertex_Degree, check_unitary_realizable
from directed_quantum_walk.line_graph.edge_list_format import parse_edge_list, read_edge_list, render_edge_list, write_edge_list
from directed_quantum_walk.walk_exceptions.graph_exceptions import Edge_List_Parse_Exception, Invalid_Line_Specification_Exception, Vertex_Out_Of_Range_Exception


def test_line_with_one_loop_per_vertex():
    graph = build_line_with_loops(Line_With_Loops_Specification(n=2, x_max=2))
    assert graph.vertex_count == 3
    assert graph.edges == ((0, 1), (1, 2), (0, 0), (1, 1), (2, 2))


def test_line_without_loops_is_a_path():
    graph = build_line_with_loops(Line_With_Loops_Specification(n=1, x_max=3))
    assert graph.vertex_count == 4
    assert graph.edges == ((0, 1), (1, 2), (2, 3))


def test_discretized_loops_pass_through_auxiliary_vertices():
    spec = Line_With_Loops_Specification(n=2, x_max=1, loop_length=3)
    graph = build_line_with_loops(spec)
    assert graph.vertex_count == 2 + 2 * 2
    assert graph.edge_count == 1 + 2 * 3
    for vertex in range(2, graph.vertex_count):
        assert spec.is_auxiliary(vertex)
        assert graph.in_degree(vertex) == 1
        assert graph.out_degree(vertex) == 1
    assert spec.loop_cycle(1, 1) == [(1, 4), (4, 5), (5, 1)]


@pytest.mark.parametrize("field_name, kwargs", [("n", {"n": 0}), ("x_max", {"x_max": 0}), ("loop_length", {"loop_length": 0})])
def test_invalid_specification_rejected(field_name, kwargs):
    with pytest.raises(Invalid_Line_Specification_Exception) as error:
        Line_With_Loops_Specification(**kwargs)
    assert error.value.field_name == field_name


@given(n=st.integers(1, 6), x_max=st.integers(2, 8))
def test_interior_line_vertices_have_degree_n(n, x_max):
    graph = build_line_with_loops(Line_With_Loops_Specification(n=n, x_max=x_max))
    for vertex in range(1, x_max):
        assert graph.in_degree(vertex) == n
        assert graph.out_degree(vertex) == n


@given(n=st.integers(1, 5), x_max=st.integers(1, 6), loop_length=st.integers(1, 4))
def test_generated_interiors_are_realizable(n, x_max, loop_length):
    spec = Line_With_Loops_Specification(n=n, x_max=x_max, loop_length=loop_length)
    assert check_unitary_realizable(build_line_with_loops(spec), interior_vertices(spec)).is_realizable


def test_endpoints_reported_unbalanced():
    spec = Line_With_Loops_Specification(n=4, x_max=10)
    graph = build_line_with_loops(spec)
    interior = check_unitary_realizable(graph, range(1, 10))
    assert interior.is_realizable
    assert interior.checked_vertex_count == 9
    report = check_unitary_realizable(graph)
    assert not report.is_realizable
    assert report.unbalanced == (Vertex_Degree(0, 3, 4), Vertex_Degree(10, 4, 3))


def test_single_edge_is_not_realizable():
    report = check_unitary_realizable(Directed_Graph(2, ((0, 1),)))
    assert not report
    assert report.unbalanced == (Vertex_Degree(0, 0, 1), Vertex_Degree(1, 1, 0))
    assert "vertex 0: in 0/out 1" in str(report)


def test_balanced_graph_with_self_loop():
    graph = Directed_Graph(2, ((0, 1), (1, 0), (0, 0)))
    assert graph.in_degree(0) == 2 and graph.out_degree(0) == 2
    assert graph.in_degree(1) == 1 and graph.out_degree(1) == 1
    assert check_unitary_realizable(graph).is_realizable


def test_graph_edges_by_index():
    graph = Directed_Graph(2, ((0, 1), (1, 0), (0, 0)))
    assert len(graph) == 2
    assert graph.edge_count == 3
    assert graph[2] == (0, 0)
    assert list(graph) == [(0, 1), (1, 0), (0, 0)]


def test_networkx_view_is_built_once_and_copied_out():
    graph = Directed_Graph(2, ((0, 1), (1, 1)))
    assert graph.in_degrees() == {0: 0, 1: 2}
    cached = graph.__dict__["_multigraph"]
    assert graph.out_degrees() == {0: 1, 1: 1}
    assert graph.__dict__["_multigraph"] is cached
    copy = graph.to_networkx()
    copy.add_edge(0, 0)
    assert graph.in_degree(0) == 0
    assert graph == Directed_Graph(2, ((0, 1), (1, 1)))


def test_edges_must_reference_existing_vertices():
    with pytest.raises(Vertex_Out_Of_Range_Exception):
        Directed_Graph(1, ((0, 1),))


def test_parse_edge_list():
    graph = parse_edge_list("0 1\n1 1\n")
    assert graph.vertex_count == 2
    assert graph.edges == ((0, 1), (1, 1))


def test_parse_skips_comments_and_blank_lines():
    graph = parse_edge_list("# comment\n\n0 0\n")
    assert graph.vertex_count == 1
    assert graph.edges == ((0, 0),)


def test_parse_empty_input():
    assert parse_edge_list("") == Directed_Graph(0)


@pytest.mark.parametrize("text, line_number", [("0 x\n", 1), ("0 1\n2\n", 2), ("# c\n0 1 2\n", 2), ("-1 0\n", 1)])
def test_malformed_line_reports_line_number(text, line_number):
    with pytest.raises(Edge_List_Parse_Exception) as error:
        parse_edge_list(text)
    assert error.value.line_number == line_number


def test_render_uses_lf_and_sequence_order():
    graph = build_line_with_loops(Line_With_Loops_Specification(n=2, x_max=1))
    assert render_edge_list(graph) == "0 1\n0 0\n1 1\n"


@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=1, max_size=40))
def test_render_then_parse_reproduces_graph(edges):
    graph = Directed_Graph(1 + max(max(edge) for edge in edges), tuple(edges))
    assert parse_edge_list(render_edge_list(graph)) == graph


def test_edge_list_file_round_trip(tmp_path):
    graph = build_line_with_loops(Line_With_Loops_Specification(n=3, x_max=4, loop_length=2))
    path = tmp_path / "line.txt"
    write_edge_list(path, graph)
    assert b"\r" not in path.read_bytes()
    assert read_edge_list(path) == graph
