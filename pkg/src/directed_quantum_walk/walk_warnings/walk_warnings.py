"""A module containing warnings raised during evolution, sweeps and graph checks."""
from directed_quantum_walk.walk_warnings.Quantum_Walk_Warning import Quantum_Walk_Warning


class Norm_Drift_Warning(Quantum_Walk_Warning):

    def __init__(self, norm: float, steps: int, tolerance: float):
        self.norm = norm
        self.steps = steps
        self.tolerance = tolerance
        super().__init__(f"State norm drifted to {norm!r} after {steps} steps (tolerance {tolerance})")


class Reduced_Substitution_Warning(Quantum_Walk_Warning):

    def __init__(self, n: int, full_mode_limit: int):
        self.n = n
        self.full_mode_limit = full_mode_limit
        super().__init__(f"Quantum walk with n={n} exceeds the full simulation limit {full_mode_limit}. Running the reduced walk")


class Unbalanced_Vertex_Warning(Quantum_Walk_Warning):

    def __init__(self, vertex: int, in_degree: int, out_degree: int):
        self.vertex = vertex
        self.in_degree = in_degree
        self.out_degree = out_degree
        super().__init__(f"Vertex {vertex} has {in_degree} edges in and {out_degree} edges out")
