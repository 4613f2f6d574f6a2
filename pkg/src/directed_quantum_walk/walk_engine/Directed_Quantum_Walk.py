"""Module containing the Directed_Quantum_Walk class."""
import warnings

from directed_quantum_walk.coins.Coin_Matrix import Coin_Matrix, fourier_coin
from directed_quantum_walk.walk_engine.Edge_Pairing import Edge_Pairing, Pairing_Mode, make_random_pairing, natural_pairing, random_pairing_schedule
from directed_quantum_walk.walk_engine.Full_State import Full_State
from directed_quantum_walk.walk_engine.Position_Distribution import Position_Distribution, position_distribution
from directed_quantum_walk.walk_engine.Walk_Configuration import Walk_Configuration
from directed_quantum_walk.walk_engine.walk_evolution import initial_state, step
from directed_quantum_walk.walk_warnings.walk_warnings import Norm_Drift_Warning


class Directed_Quantum_Walk:
    """
    A walker on the directed line with n-1 loops per vertex, evolved by the Fourier coin and an edge pairing.
    The walk owns its state exclusively; each step replaces it.
    """
    NORM_TOLERANCE = 1e-9

    def __init__(self, config: Walk_Configuration = Walk_Configuration(), coin: Coin_Matrix | None = None):
        """
        :param config: The walk to run.
        :param coin: Optional coin replacing the Fourier coin of dimension config.n.
        """
        self.config: Walk_Configuration = config
        if coin is None:
            coin = fourier_coin(config.n)
        self.coin: Coin_Matrix = coin
        self.state: Full_State = initial_state(config)
        self._steps_taken: int = 0
        self._schedule: list[Edge_Pairing] | None = None
        if config.pairing_mode is Pairing_Mode.Natural:
            self.pairing: Edge_Pairing = natural_pairing(config.n, config.t_cap)
        elif config.rerandomize_pairing:
            self._schedule = random_pairing_schedule(config.n, config.t_cap, config.seed, config.t)
            self.pairing = self._schedule[0] if len(self._schedule) > 0 else make_random_pairing(config.n, config.t_cap, config.seed)
        else:
            self.pairing = make_random_pairing(config.n, config.t_cap, config.seed)

    @property
    def steps_taken(self) -> int:
        """
        :return: The number of steps applied since the walk was initialized.
        """
        return self._steps_taken

    @property
    def steps_remaining(self) -> int:
        """
        :return: Steps left before reaching config.t.
        """
        return self.config.t - self._steps_taken

    def step(self) -> Full_State:
        """
        Apply one coin and shift to the current state.
        :return: The new state.
        """
        if self._schedule is not None:
            self.pairing = self._schedule[self._steps_taken]
        self.state = step(self.state, self.coin, self.pairing)
        self._steps_taken += 1
        return self.state

    def run(self) -> Full_State:
        """
        Step until config.t steps have been taken. Warns if the norm drifted past NORM_TOLERANCE.
        :return: The final state.
        """
        while self.steps_remaining > 0:
            self.step()
        norm = self.state.norm()
        if abs(norm - 1.0) > self.NORM_TOLERANCE:
            warnings.warn(Norm_Drift_Warning(norm, self._steps_taken, self.NORM_TOLERANCE))
        return self.state

    def distribution(self) -> Position_Distribution:
        """
        :return: Position distribution of the current state.
        """
        return position_distribution(self.state)

    def __repr__(self):
        return f"Directed_Quantum_Walk(n={self.config.n}, steps={self._steps_taken}/{self.config.t}, pairing={self.pairing.mode})"


def evolve(config: Walk_Configuration) -> Full_State:
    """
    :param config: The walk to run.
    :return: The state after config.t steps from the forward edge of vertex 0.
    """
    return Directed_Quantum_Walk(config).run()
