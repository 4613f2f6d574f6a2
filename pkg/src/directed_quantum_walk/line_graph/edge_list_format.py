"""Reading and writing directed graphs as plain text edge lists.

One "source target" pair of decimal vertex ids per line. Lines starting with '#' are comments and blank lines are skipped.
"""
import re
from pathlib import Path

from directed_quantum_walk.line_graph.Directed_Graph import Directed_Graph
from directed_quantum_walk.walk_exceptions.graph_exceptions import Edge_List_Parse_Exception

_VERTEX_ID = re.compile(r"[0-9]+")


def parse_edge_list(text: str) -> Directed_Graph:
    """
    :param text: Edge list text.
    :return: Graph with one vertex past the largest id seen and edges in file order.
    """
    edges: list[tuple[int, int]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped == "" or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise Edge_List_Parse_Exception(line_number, line, f"expected 2 vertex ids, found {len(tokens)} tokens")
        for token in tokens:
            if _VERTEX_ID.fullmatch(token) is None:
                raise Edge_List_Parse_Exception(line_number, line, f"{token!r} is not a non-negative decimal integer")
        edges.append((int(tokens[0]), int(tokens[1])))
    if len(edges) == 0:
        return Directed_Graph(0)
    vertex_count = 1 + max(max(source, target) for source, target in edges)
    return Directed_Graph(vertex_count, tuple(edges))


def render_edge_list(graph: Directed_Graph) -> str:
    """
    :param graph: Graph to write.
    :return: Edge list text with one LF terminated line per edge in sequence order.
    """
    return "".join(f"{source} {target}\n" for source, target in graph)


def read_edge_list(path: str | Path) -> Directed_Graph:
    """
    :param path: Path to an edge list file.
    :return: The parsed graph.
    """
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def write_edge_list(path: str | Path, graph: Directed_Graph):
    """
    :param path: File to write.
    :param graph: Graph to write in the edge list format.
    """
    with open(path, "w", encoding="ascii", newline="\n") as edge_file:
        edge_file.write(render_edge_list(graph))
