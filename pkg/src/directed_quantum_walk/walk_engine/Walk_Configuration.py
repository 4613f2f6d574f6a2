"""A module containing the configuration of a single directed walk run."""
from dataclasses import dataclass

from directed_quantum_walk.walk_engine.Edge_Pairing import Pairing_Mode
from directed_quantum_walk.walk_exceptions.state_exceptions import Walk_Configuration_Exception, Loop_Length_Exception


@dataclass(frozen=True)
class Walk_Configuration:
    """The configuration of a walk started on the forward edge of vertex 0."""
    n: int = 2
    t: int = 100
    pairing_mode: Pairing_Mode = Pairing_Mode.Natural
    seed: int | None = None
    loop_length: int = 1
    rerandomize_pairing: bool = False

    def __post_init__(self):
        if isinstance(self.pairing_mode, str):
            object.__setattr__(self, "pairing_mode", Pairing_Mode.from_string(self.pairing_mode))
        if self.n < 1:
            raise Walk_Configuration_Exception("n", self.n)
        if self.t < 0:
            raise Walk_Configuration_Exception("t", self.t)
        if self.loop_length < 1:
            raise Loop_Length_Exception(self.loop_length)
        if self.pairing_mode is Pairing_Mode.Random and self.seed is None:
            raise Walk_Configuration_Exception("seed", self.seed)
        if self.rerandomize_pairing and self.pairing_mode is not Pairing_Mode.Random:
            raise Walk_Configuration_Exception("rerandomize_pairing", self.rerandomize_pairing)

    @property
    def t_cap(self) -> int:
        """
        :return: The largest position reachable in t steps.
        """
        return self.t
