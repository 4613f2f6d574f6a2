"""A module containing the rows produced by parameter sweeps."""
from dataclasses import dataclass, field
from enum import Enum

from directed_quantum_walk.walk_engine.Edge_Pairing import Pairing_Mode
from directed_quantum_walk.walk_engine.Position_Distribution import Position_Distribution


class Walk_Mode(Enum):
    """The walk a sweep entry runs."""
    Quantum = "quantum"
    Classical = "classical"
    Reduced = "reduced"

    def __str__(self):
        return self.value

    def __repr__(self):
        return self.value

    @staticmethod
    def from_string(mode_str: str):
        """
        :param mode_str: "quantum", "classical" or "reduced".
        :return: The walk mode named by the string.
        """
        return Walk_Mode(mode_str.strip().lower())


@dataclass(frozen=True)
class Sweep_Record:
    """
    Summary of one walk in a sweep.
    pairing and seed are None where the walk has no pairing, interval and tail where the walk has no concentration interval.
    """
    n: int
    t: int
    mode: Walk_Mode
    pairing: Pairing_Mode | None
    seed: int | None
    mean: float
    variance: float
    interval_lo: float | None = None
    interval_hi: float | None = None
    tail_mass: float | None = None
    loop_length: int = 1
    distribution: Position_Distribution | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.tail_mass is not None:
            assert -1e-12 <= self.tail_mass <= 1.0 + 1e-12, f"Tail mass {self.tail_mass} is not a probability"

    @property
    def speed(self) -> float:
        """
        :return: Mean position per step, 0 for t = 0.
        """
        if self.t == 0:
            return 0.0
        return self.mean / self.t
