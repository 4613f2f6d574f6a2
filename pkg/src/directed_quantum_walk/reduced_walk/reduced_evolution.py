"""The two dimensional reduced walk and its certification against the full walk."""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from directed_quantum_walk.coins.Reduced_Coin import Reduced_Coin, reduced_coin
from directed_quantum_walk.reduced_walk.Reduced_State import Reduced_State
from directed_quantum_walk.walk_engine.Directed_Quantum_Walk import evolve
from directed_quantum_walk.walk_engine.Full_State import Full_State
from directed_quantum_walk.walk_engine.Position_Distribution import position_distribution
from directed_quantum_walk.walk_engine.Walk_Configuration import Walk_Configuration
from directed_quantum_walk.walk_exceptions.coin_exceptions import Reduced_Dimension_Exception
from directed_quantum_walk.walk_exceptions.state_exceptions import Capacity_Exception, Loop_Length_Exception, Walk_Configuration_Exception


def reduced_initial_state(n: int, t_cap: int) -> Reduced_State:
    """
    :param n: Dimension of the full coin.
    :param t_cap: Largest representable position.
    :return: Reduced state with amplitude 1 on the forward edge of position 0.
    """
    state = Reduced_State(n, t_cap)
    state.amplitudes[0, Reduced_State.FORWARD] = 1.0
    return state


def reduced_step(state: Reduced_State, coin: Reduced_Coin) -> Reduced_State:
    """
    Applies the reduced coin at every position, then moves forward amplitude one position and leaves loop amplitude in place.
    :param state: The current reduced state.
    :param coin: The reduced coin.
    :return: The next reduced state.
    """
    forward, loops = state.forward, state.loop_super
    coined_forward = coin.beta * forward + coin.alpha * loops
    coined_loops = coin.alpha * forward - coin.beta * loops
    if coined_forward[-1] != 0:
        raise Capacity_Exception(state.t_cap, complex(coined_forward[-1]))
    stepped = Reduced_State(state.n, state.t_cap)
    stepped.amplitudes[1:, Reduced_State.FORWARD] = coined_forward[:-1]
    stepped.amplitudes[:, Reduced_State.LOOP_SUPER] = coined_loops
    return stepped


def evolve_reduced(n: int, t: int) -> Reduced_State:
    """
    :param n: Dimension of the full coin, at least 2.
    :param t: Number of steps.
    :return: The reduced state after t steps from the forward edge of position 0.
    """
    if n < 2:
        raise Reduced_Dimension_Exception(n)
    if t < 0:
        raise Walk_Configuration_Exception("t", t)
    coin = reduced_coin(n)
    state = reduced_initial_state(n, t)
    for _ in range(t):
        state = reduced_step(state, coin)
    return state


def project_to_reduced(full: Full_State) -> tuple[Reduced_State, float]:
    """
    :param full: A state of the full walk with plain self-loops.
    :return: The projection onto the forward edges and the uniform loop superpositions,
        and the norm of the part of the state orthogonal to that subspace.
    """
    if full.loop_length != 1:
        raise Loop_Length_Exception(full.loop_length, f"Only plain self-loops project onto the reduced walk, got loop length {full.loop_length}")
    if full.n < 2:
        raise Reduced_Dimension_Exception(full.n)
    loops = full.amplitudes[:, 1:full.n]
    reduced = Reduced_State(full.n, full.t_cap)
    reduced.amplitudes[:, Reduced_State.FORWARD] = full.amplitudes[:, 0]
    reduced.amplitudes[:, Reduced_State.LOOP_SUPER] = np.sum(loops, axis=1) / math.sqrt(full.n - 1)
    residual = loops - np.mean(loops, axis=1, keepdims=True)
    return reduced, float(np.linalg.norm(residual))


@dataclass(frozen=True)
class Equivalence_Report:
    """Differences between the projected full walk and the reduced walk after the same number of steps."""
    n: int
    t: int
    max_amplitude_diff: float
    max_probability_diff: float
    residual_norm: float
    tolerance: float

    @property
    def passed(self) -> bool:
        """
        :return: True if amplitudes agree and the full walk stayed in the reduced subspace within tolerance.
        """
        return self.max_amplitude_diff < self.tolerance and self.residual_norm < self.tolerance

    def __str__(self):
        return (f"n={self.n} t={self.t}: max amplitude diff {self.max_amplitude_diff:.3e}, "
                f"max probability diff {self.max_probability_diff:.3e}, residual {self.residual_norm:.3e}")


def equivalence_check(n: int, t: int, tolerance: float = 1e-9) -> Equivalence_Report:
    """
    Runs the full walk with natural pairing and plain loops alongside the reduced walk and compares them.
    :param n: Dimension of the full coin, at least 2.
    :param t: Number of steps.
    :param tolerance: Threshold recorded in the report.
    :return: The equivalence report.
    """
    if n < 2:
        raise Reduced_Dimension_Exception(n)
    with ThreadPoolExecutor(max_workers=2) as executor:
        full_future = executor.submit(evolve, Walk_Configuration(n=n, t=t))
        reduced_future = executor.submit(evolve_reduced, n, t)
        full, reduced = full_future.result(), reduced_future.result()
    projected, residual_norm = project_to_reduced(full)
    amplitude_diff = float(np.max(np.abs(projected.amplitudes - reduced.amplitudes)))
    probability_diff = float(np.max(np.abs(position_distribution(full).probabilities - position_distribution(reduced).probabilities)))
    return Equivalence_Report(n, t, amplitude_diff, probability_diff, residual_norm, tolerance)
