"""Module containing exceptions raised by coin construction and application."""
from directed_quantum_walk.walk_exceptions.Quantum_Walk_Exception import Quantum_Walk_Exception


class Coin_Dimension_Exception(Quantum_Walk_Exception):

    def __init__(self, dimension: int, expected: int | None = None):
        self.dimension = dimension
        self.expected = expected
        if expected is None:
            message = f"Coin dimension must be at least 1 but got {dimension}"
        else:
            message = f"Coin of dimension {dimension} cannot act on a coin space of dimension {expected}"
        super().__init__(message)


class Reduced_Dimension_Exception(Quantum_Walk_Exception):

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"The loop subspace requires n >= 2 but got n={n}")


class Non_Square_Coin_Exception(Quantum_Walk_Exception):

    def __init__(self, shape: tuple[int, ...]):
        self.shape = shape
        super().__init__(f"Coin entries must form a square matrix but have shape {shape}")
