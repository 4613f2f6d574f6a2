"""A module containing the specification of the directed line with self-loops and its graph construction."""
from dataclasses import dataclass

from directed_quantum_walk.line_graph.Directed_Graph import Directed_Graph
from directed_quantum_walk.walk_exceptions.graph_exceptions import Invalid_Line_Specification_Exception


@dataclass(frozen=True)
class Line_With_Loops_Specification:
    """
    The specification of a directed line with n-1 loops at every line vertex.
    n: The coin dimension, one forward edge plus n-1 loops per vertex.
    x_max: The number of forward edges materialized. Line vertices are 0..x_max.
    loop_length: The number of edges in the directed cycle realizing each loop. 1 is a plain self-loop.
    """
    n: int = 2
    x_max: int = 1
    loop_length: int = 1

    def __post_init__(self):
        for field_name in ("n", "x_max", "loop_length"):
            value = getattr(self, field_name)
            if value < 1:
                raise Invalid_Line_Specification_Exception(field_name, value)

    @property
    def line_vertex_count(self) -> int:
        """
        :return: The number of vertices on the line.
        """
        return self.x_max + 1

    @property
    def loops_per_vertex(self) -> int:
        """
        :return: The number of loops at each line vertex.
        """
        return self.n - 1

    @property
    def auxiliary_vertices_per_loop(self) -> int:
        """
        :return: The number of fresh vertices inside each discretized loop.
        """
        return self.loop_length - 1

    @property
    def vertex_count(self) -> int:
        """
        :return: Total number of line and auxiliary vertices in the constructed graph.
        """
        return self.line_vertex_count * (1 + self.loops_per_vertex * self.auxiliary_vertices_per_loop)

    def auxiliary_vertex(self, x: int, loop: int, depth: int) -> int:
        """
        Auxiliary vertices are numbered after the line vertices, grouped by base vertex, then loop, then depth.
        :param x: The line vertex the loop is based at.
        :param loop: The loop number, 1..n-1.
        :param depth: The depth of the vertex inside the loop cycle, 1..loop_length-1.
        :return: The vertex id of the auxiliary vertex.
        """
        per_vertex = self.loops_per_vertex * self.auxiliary_vertices_per_loop
        return self.line_vertex_count + x * per_vertex + (loop - 1) * self.auxiliary_vertices_per_loop + (depth - 1)

    def is_auxiliary(self, vertex: int) -> bool:
        """
        :param vertex: A vertex id of the constructed graph.
        :return: True if the vertex lies inside a discretized loop.
        """
        return vertex >= self.line_vertex_count

    def loop_cycle(self, x: int, loop: int) -> list[tuple[int, int]]:
        """
        :param x: The line vertex the loop is based at.
        :param loop: The loop number, 1..n-1.
        :return: The edges of the directed cycle realizing the loop, starting and ending at x.
        """
        path = [x] + [self.auxiliary_vertex(x, loop, depth) for depth in range(1, self.loop_length)] + [x]
        return list(zip(path[:-1], path[1:]))


def build_line_with_loops(spec: Line_With_Loops_Specification) -> Directed_Graph:
    """
    Forward edges come first in line order, followed by every loop cycle grouped by base vertex then loop number.
    :param spec: The specification of the line to build.
    :return: The directed graph of the line with loops.
    """
    edges: list[tuple[int, int]] = [(x, x + 1) for x in range(spec.x_max)]
    for x in range(spec.line_vertex_count):
        for loop in range(1, spec.n):
            edges.extend(spec.loop_cycle(x, loop))
    return Directed_Graph(spec.vertex_count, tuple(edges))


def interior_vertices(spec: Line_With_Loops_Specification) -> list[int]:
    """
    :param spec: The specification of the line.
    :return: Line vertices 1..x_max-1 followed by every auxiliary loop vertex. The line endpoints are excluded.
    """
    return list(range(1, spec.x_max)) + list(range(spec.line_vertex_count, spec.vertex_count))
