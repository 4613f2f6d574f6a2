"""Module containing exceptions raised by inconsistent command line options."""
from directed_quantum_walk.walk_exceptions.Quantum_Walk_Exception import Quantum_Walk_Exception


class Usage_Exception(Quantum_Walk_Exception):

    def __init__(self, message: str):
        super().__init__(message)
