"""Module containing the in/out degree balance check of directed graphs."""
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from directed_quantum_walk.line_graph.Directed_Graph import Directed_Graph
from directed_quantum_walk.walk_exceptions.graph_exceptions import Vertex_Out_Of_Range_Exception


class Vertex_Degree(NamedTuple):
    """The degree counts of a single vertex."""
    vertex: int
    in_degree: int
    out_degree: int

    def __str__(self):
        return f"vertex {self.vertex}: in {self.in_degree}/out {self.out_degree}"


@dataclass(frozen=True)
class Realizability_Report:
    """
    Result of checking that every vertex has the same number of edges in and out,
    the condition under which some pairing of incoming and outgoing edges gives a unitary walk.
    """
    is_realizable: bool
    unbalanced: tuple[Vertex_Degree, ...]
    checked_vertex_count: int

    def __bool__(self):
        return self.is_realizable

    def __str__(self):
        if self.is_realizable:
            return f"Realizable: {self.checked_vertex_count} vertices balanced"
        lines = [f"Not realizable: {len(self.unbalanced)} of {self.checked_vertex_count} vertices unbalanced"]
        lines.extend(f"\t{degree}" for degree in self.unbalanced)
        return "\n".join(lines)


def check_unitary_realizable(graph: Directed_Graph, vertices: Iterable[int] | None = None) -> Realizability_Report:
    """
    :param graph: The graph to check.
    :param vertices: Optional subset of vertices to check. All vertices are checked by default.
    :return: Report of whether in-degree equals out-degree at every checked vertex, listing each violating vertex.
    """
    in_degrees = graph.in_degrees()
    out_degrees = graph.out_degrees()
    if vertices is None:
        checked = list(range(graph.vertex_count))
    else:
        checked = sorted(set(vertices))
        for vertex in checked:
            if vertex < 0 or vertex >= graph.vertex_count:
                raise Vertex_Out_Of_Range_Exception(vertex, graph.vertex_count)
    unbalanced = tuple(Vertex_Degree(v, in_degrees[v], out_degrees[v]) for v in checked if in_degrees[v] != out_degrees[v])
    return Realizability_Report(len(unbalanced) == 0, unbalanced, len(checked))
