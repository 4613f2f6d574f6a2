"""Module containing the Directed_Graph class."""
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import networkx as nx

from directed_quantum_walk.walk_exceptions.graph_exceptions import Vertex_Out_Of_Range_Exception


@dataclass(frozen=True)
class Directed_Graph:
    """
    A directed multigraph over the dense vertex ids 0..vertex_count-1.
    Edges are identified by their index in the edge sequence, so parallel edges and self-loops are distinct edges.
    """
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(s), int(t)) for s, t in self.edges))
        for source, target in self.edges:
            for vertex in (source, target):
                if vertex < 0 or vertex >= self.vertex_count:
                    raise Vertex_Out_Of_Range_Exception(vertex, self.vertex_count)

    @property
    def edge_count(self) -> int:
        """
        :return: The number of edges, counting parallel edges and self-loops individually.
        """
        return len(self.edges)

    def __len__(self):
        return self.vertex_count

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)

    def __getitem__(self, edge_index: int) -> tuple[int, int]:
        return self.edges[edge_index]

    @cached_property
    def _multigraph(self) -> nx.MultiDiGraph:
        # stored in the instance __dict__, which the frozen dataclass leaves writable
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from((source, target, index) for index, (source, target) in enumerate(self.edges))
        return graph

    def to_networkx(self) -> nx.MultiDiGraph:
        """
        :return: A networkx multigraph with every vertex id as a node and one keyed edge per edge index.
            The graph is a fresh copy, so callers may modify it.
        """
        return self._multigraph.copy()

    def in_degrees(self) -> dict[int, int]:
        """
        :return: Dictionary of vertex ids keyed to the number of edges ending at that vertex.
        """
        return dict(self._multigraph.in_degree())

    def out_degrees(self) -> dict[int, int]:
        """
        :return: Dictionary of vertex ids keyed to the number of edges starting at that vertex.
        """
        return dict(self._multigraph.out_degree())

    def in_degree(self, vertex: int) -> int:
        """
        :param vertex: The vertex to count incoming edges of.
        :return: The number of edges ending at vertex. A self-loop counts once in and once out.
        """
        if vertex < 0 or vertex >= self.vertex_count:
            raise Vertex_Out_Of_Range_Exception(vertex, self.vertex_count)
        return self._multigraph.in_degree(vertex)

    def out_degree(self, vertex: int) -> int:
        """
        :param vertex: The vertex to count outgoing edges of.
        :return: The number of edges starting at vertex.
        """
        if vertex < 0 or vertex >= self.vertex_count:
            raise Vertex_Out_Of_Range_Exception(vertex, self.vertex_count)
        return self._multigraph.out_degree(vertex)
