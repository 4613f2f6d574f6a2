"""A Module containing the base class for Quantum Walk Warnings."""


class Quantum_Walk_Warning(RuntimeWarning):
    """
        Warnings about the numerical state of a walk that can be handled
    """

    def __init__(self, message: str):
        self.message = f"\n\t{message}"
        super().__init__(self.message)
