"""Applying a coin within the edge subspace of every line vertex."""
from directed_quantum_walk.coins.Coin_Matrix import Coin_Matrix
from directed_quantum_walk.walk_engine.Full_State import Full_State
from directed_quantum_walk.walk_exceptions.coin_exceptions import Coin_Dimension_Exception


def apply_coin(state: Full_State, coin: Coin_Matrix) -> Full_State:
    """
    Replaces the length n amplitude vector of every position with the coin times that vector.
    Loop interior edges leave single-edge vertices, where the coin is the identity, so they are untouched.
    :param state: The state to act on.
    :param coin: A coin with the state's coin dimension.
    :return: A new state after the coin, before any shift.
    """
    if coin.dim != state.n:
        raise Coin_Dimension_Exception(coin.dim, state.n)
    coined = state.copy()
    # rows hold label vectors, so C v for every row is V C^T
    coined.amplitudes[:, :state.n] = state.line_amplitudes @ coin.entries.T
    return coined
