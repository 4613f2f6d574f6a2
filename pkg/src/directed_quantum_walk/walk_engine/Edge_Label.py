"""Module containing the edge labels of the walk basis and their column layout in a dense state."""
from dataclasses import dataclass
from enum import Enum


class Edge_Label_Kind(Enum):
    """The three kinds of edge a walker can occupy on the line with loops."""
    Forward = "forward"
    Loop = "loop"
    Loop_Interior = "loop_interior"

    def __str__(self):
        return self.value

    def __repr__(self):
        return self.value


@dataclass(frozen=True)
class Edge_Label:
    """
    An edge label, identified with the vertex at its base.
    Forward is the line edge x -> x+1, Loop k is the first edge of loop k leaving its line vertex,
    and Loop_Interior (k, depth) is the edge leaving the depth-th auxiliary vertex of loop k.

    Columns of a dense state are laid out as
        0 | 1 .. n-1 | n + (k-1)(L-1) + (depth-1)
    so the first n columns are the coin space of a line vertex.
    """
    kind: Edge_Label_Kind = Edge_Label_Kind.Forward
    loop: int = 0
    depth: int = 0

    @staticmethod
    def forward():
        """
        :return: The label of the line edge.
        """
        return Edge_Label(Edge_Label_Kind.Forward)

    @staticmethod
    def loop_label(loop: int):
        """
        :param loop: The loop number, 1..n-1.
        :return: The label of the loop edge leaving its line vertex.
        """
        return Edge_Label(Edge_Label_Kind.Loop, loop)

    @staticmethod
    def loop_interior(loop: int, depth: int):
        """
        :param loop: The loop number, 1..n-1.
        :param depth: Depth of the edge inside the discretized loop, 1..L-1.
        :return: The label of an edge inside a discretized loop.
        """
        return Edge_Label(Edge_Label_Kind.Loop_Interior, loop, depth)

    def column(self, n: int, loop_length: int = 1) -> int:
        """
        :param n: The coin dimension.
        :param loop_length: The number of edges in each loop cycle.
        :return: The column of this label in a dense state array.
        """
        if self.kind is Edge_Label_Kind.Forward:
            return 0
        assert 1 <= self.loop <= n - 1, f"Loop {self.loop} does not exist with n={n}"
        if self.kind is Edge_Label_Kind.Loop:
            return self.loop
        assert 1 <= self.depth <= loop_length - 1, f"Loop depth {self.depth} does not exist with loop length {loop_length}"
        return n + (self.loop - 1) * (loop_length - 1) + (self.depth - 1)

    @staticmethod
    def from_column(column: int, n: int, loop_length: int = 1):
        """
        :param column: A column of a dense state array.
        :param n: The coin dimension.
        :param loop_length: The number of edges in each loop cycle.
        :return: The label stored in that column.
        """
        if column == 0:
            return Edge_Label.forward()
        elif column < n:
            return Edge_Label.loop_label(column)
        interior_index = column - n
        return Edge_Label.loop_interior(1 + interior_index // (loop_length - 1), 1 + interior_index % (loop_length - 1))

    def __str__(self):
        if self.kind is Edge_Label_Kind.Forward:
            return "->"
        elif self.kind is Edge_Label_Kind.Loop:
            return str(self.loop)
        return f"{self.loop}.{self.depth}"


def label_count(n: int, loop_length: int = 1) -> int:
    """
    :param n: The coin dimension.
    :param loop_length: The number of edges in each loop cycle.
    :return: Number of edge labels per line position, counting loop interiors.
    """
    return n + (n - 1) * (loop_length - 1)
