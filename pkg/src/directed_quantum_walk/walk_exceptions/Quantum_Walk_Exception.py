"""Module containing the base class for Quantum Walk Exceptions."""


class Quantum_Walk_Exception(Exception):
    """
        Superclass for all exceptions that would put a walk, its graph or its coin in an invalid state
    """

    def __init__(self, message: str):
        self.message = f"Quantum Walk Exception: {message}"
        super().__init__(self.message)
