"""Module containing exceptions raised while evolving walk states."""
from directed_quantum_walk.walk_exceptions.Quantum_Walk_Exception import Quantum_Walk_Exception


class Capacity_Exception(Quantum_Walk_Exception):

    def __init__(self, t_cap: int, amplitude: complex):
        self.t_cap = t_cap
        self.amplitude = amplitude
        super().__init__(f"Amplitude {amplitude} on the forward edge of position {t_cap} would leave a state sized to t_cap={t_cap}")


class Pairing_Coverage_Exception(Quantum_Walk_Exception):

    def __init__(self, message: str):
        super().__init__(message)


class Loop_Length_Exception(Quantum_Walk_Exception):

    def __init__(self, loop_length: int, message: str | None = None):
        self.loop_length = loop_length
        if message is None:
            message = f"Loop length must be at least 1 but got {loop_length}"
        super().__init__(message)


class Walk_Configuration_Exception(Quantum_Walk_Exception):

    def __init__(self, field_name: str, value):
        self.field_name = field_name
        self.value = value
        super().__init__(f"Invalid walk configuration {field_name}={value!r}")
