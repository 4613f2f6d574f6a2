"""A module containing the options of a single command line walk."""
from dataclasses import dataclass
from pathlib import Path

from directed_quantum_walk.walk_analysis.Sweep_Record import Walk_Mode
from directed_quantum_walk.walk_engine.Edge_Pairing import Pairing_Mode
from directed_quantum_walk.walk_exceptions.cli_exceptions import Usage_Exception


@dataclass(frozen=True)
class Run_Options:
    """The options of the run command."""
    mode: Walk_Mode = Walk_Mode.Quantum
    n: int = 4
    t: int = 100
    pairing: Pairing_Mode = Pairing_Mode.Natural
    seed: int | None = None
    loop_length: int = 1
    rerandomize_pairing: bool = False
    out_dir: Path = Path(".")

    def validate(self):
        """
        Raises a Usage_Exception if the options are not mutually consistent.
        """
        if self.n < 1:
            raise Usage_Exception(f"--n must be at least 1, got {self.n}")
        if self.t < 0:
            raise Usage_Exception(f"--t must be non-negative, got {self.t}")
        if self.loop_length < 1:
            raise Usage_Exception(f"--loop-length must be at least 1, got {self.loop_length}")
        if self.pairing is Pairing_Mode.Random and self.seed is None:
            raise Usage_Exception("--pairing random requires --seed")
        if self.pairing is Pairing_Mode.Random and self.mode is not Walk_Mode.Quantum:
            raise Usage_Exception(f"--pairing random only applies to --mode quantum, not {self.mode}")
        if self.loop_length > 1 and self.mode is not Walk_Mode.Quantum:
            raise Usage_Exception(f"--loop-length > 1 only applies to --mode quantum, not {self.mode}")
        if self.rerandomize_pairing and self.pairing is not Pairing_Mode.Random:
            raise Usage_Exception("--rerandomize requires --pairing random")

    @property
    def file_stem(self) -> str:
        """
        :return: Name of the distribution file without extension, unique per distinct walk.
        """
        stem = f"distribution_{self.mode}_n{self.n}_t{self.t}"
        if self.pairing is Pairing_Mode.Random:
            stem += f"_random_s{self.seed}"
            if self.rerandomize_pairing:
                stem += "_per_step"
        if self.loop_length > 1:
            stem += f"_L{self.loop_length}"
        return stem

    @property
    def output_path(self) -> Path:
        """
        :return: Path of the distribution CSV in the output directory.
        """
        return self.out_dir / f"{self.file_stem}.csv"
