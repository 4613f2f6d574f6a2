"""Module containing exceptions raised while building, parsing or indexing directed graphs."""
from directed_quantum_walk.walk_exceptions.Quantum_Walk_Exception import Quantum_Walk_Exception


class Graph_Exception(Quantum_Walk_Exception):

    def __init__(self, message: str):
        super().__init__(message)


class Invalid_Line_Specification_Exception(Graph_Exception):

    def __init__(self, field_name: str, value: int, minimum: int = 1):
        self.field_name = field_name
        self.value = value
        self.minimum = minimum
        super().__init__(f"Line with loops requires {field_name} >= {minimum} but got {value}")


class Edge_List_Parse_Exception(Graph_Exception):

    def __init__(self, line_number: int, line: str, reason: str):
        self.line_number = line_number
        self.line = line
        self.reason = reason
        super().__init__(f"Cannot parse edge list at line {line_number} ({line!r}): {reason}")


class Vertex_Out_Of_Range_Exception(Graph_Exception):

    def __init__(self, vertex: int, vertex_count: int):
        self.vertex = vertex
        self.vertex_count = vertex_count
        super().__init__(f"Vertex {vertex} is not in a graph of {vertex_count} vertices")
