"""The shift operator and one step U = S (I x C) of the directed walk."""
import numpy as np

from directed_quantum_walk.coins.Coin_Matrix import Coin_Matrix
from directed_quantum_walk.coins.coin_application import apply_coin
from directed_quantum_walk.walk_engine.Edge_Label import Edge_Label
from directed_quantum_walk.walk_engine.Edge_Pairing import Edge_Pairing, Pairing_Mode
from directed_quantum_walk.walk_engine.Full_State import Full_State
from directed_quantum_walk.walk_engine.Walk_Configuration import Walk_Configuration
from directed_quantum_walk.walk_exceptions.state_exceptions import Capacity_Exception, Pairing_Coverage_Exception


def initial_state(config: Walk_Configuration) -> Full_State:
    """
    :param config: The walk configuration sizing the state.
    :return: State with amplitude 1 on the forward edge of vertex 0.
    """
    return Full_State.basis_state(config.n, config.t_cap, 0, Edge_Label.forward(), config.loop_length)


def shift(state: Full_State, pairing: Edge_Pairing) -> Full_State:
    """
    Moves the amplitude on every edge to the edge paired with it at the edge's target vertex.
    The forward edge of x arrives at x+1 on the incoming line slot.
    Loop k of x arrives back at x on incoming slot k, after passing through the L-1 interior edges of a discretized loop.
    :param state: State after the coin.
    :param pairing: Pairing covering every line vertex of the state.
    :return: The shifted state.
    """
    n, t_cap = state.n, state.t_cap
    if pairing.n != n:
        raise Pairing_Coverage_Exception(f"Pairing has {pairing.n} slots per vertex but the state has n={n}")
    if pairing.x_max < t_cap:
        raise Pairing_Coverage_Exception(f"Pairing covers vertices 0..{pairing.x_max} but the state reaches {t_cap}")
    amplitudes = state.amplitudes
    escaping = amplitudes[t_cap, 0]
    if escaping != 0:
        raise Capacity_Exception(t_cap, complex(escaping))
    shifted = Full_State(n, t_cap, state.loop_length)
    incoming = np.zeros((t_cap + 1, n), dtype=np.complex128)
    incoming[1:, 0] = amplitudes[:-1, 0]
    if state.loop_length == 1:
        incoming[:, 1:] = amplitudes[:, 1:n]
    else:
        interior = state.interior_amplitudes
        incoming[:, 1:] = interior[:, :, -1]
        shifted_interior = shifted.interior_amplitudes
        shifted_interior[:, :, 0] = amplitudes[:, 1:n]
        shifted_interior[:, :, 1:] = interior[:, :, :-1]
    if pairing.mode is Pairing_Mode.Natural:
        shifted.amplitudes[:, :n] = incoming
    else:
        line = np.zeros_like(incoming)
        np.put_along_axis(line, pairing.permutations[:t_cap + 1], incoming, axis=1)
        shifted.amplitudes[:, :n] = line
    return shifted


def step(state: Full_State, coin: Coin_Matrix, pairing: Edge_Pairing) -> Full_State:
    """
    :param state: The current state.
    :param coin: The coin applied at every line vertex.
    :param pairing: The pairing defining the shift.
    :return: The state after one application of U = S (I x C).
    """
    return shift(apply_coin(state, coin), pairing)

