"""Module containing the Full_State class, the walker's amplitudes over every edge of the line with loops."""
import numpy as np
from numpy.typing import NDArray

from directed_quantum_walk.walk_engine.Edge_Label import Edge_Label, label_count
from directed_quantum_walk.walk_exceptions.coin_exceptions import Coin_Dimension_Exception
from directed_quantum_walk.walk_exceptions.state_exceptions import Loop_Length_Exception, Walk_Configuration_Exception


class Full_State:
    """
    Dense complex amplitudes indexed by (position 0..t_cap, edge label column).
    Loop interior labels are stored on the row of the loop's base vertex.
    """

    def __init__(self, n: int, t_cap: int, loop_length: int = 1, amplitudes: NDArray[np.complex128] | None = None):
        if n < 1:
            raise Coin_Dimension_Exception(n)
        if t_cap < 0:
            raise Walk_Configuration_Exception("t_cap", t_cap)
        if loop_length < 1:
            raise Loop_Length_Exception(loop_length)
        self._n: int = n
        self._t_cap: int = t_cap
        self._loop_length: int = loop_length
        shape = (t_cap + 1, label_count(n, loop_length))
        if amplitudes is None:
            amplitudes = np.zeros(shape, dtype=np.complex128)
        else:
            amplitudes = np.asarray(amplitudes, dtype=np.complex128)
            assert amplitudes.shape == shape, f"Amplitudes of shape {amplitudes.shape} do not match {shape}"
        self.amplitudes: NDArray[np.complex128] = amplitudes

    @staticmethod
    def basis_state(n: int, t_cap: int, position: int, label: Edge_Label, loop_length: int = 1):
        """
        :param n: The coin dimension.
        :param t_cap: Largest representable position.
        :param position: Position of the walker.
        :param label: Edge the walker occupies.
        :param loop_length: The number of edges in each loop cycle.
        :return: State with amplitude 1 on the given edge.
        """
        state = Full_State(n, t_cap, loop_length)
        state.amplitudes[position, label.column(n, loop_length)] = 1.0
        return state

    @staticmethod
    def loop_superposition_state(n: int, t_cap: int, position: int, loop_length: int = 1):
        """
        :param n: The coin dimension, at least 2.
        :param t_cap: Largest representable position.
        :param position: Position of the walker.
        :param loop_length: The number of edges in each loop cycle.
        :return: The normalized uniform superposition of the n-1 loop edges leaving position.
        """
        state = Full_State(n, t_cap, loop_length)
        state.amplitudes[position, 1:n] = 1.0 / np.sqrt(n - 1)
        return state

    @property
    def n(self) -> int:
        """
        :return: The coin dimension.
        """
        return self._n

    @property
    def t_cap(self) -> int:
        """
        :return: The largest position the state can hold amplitude on.
        """
        return self._t_cap

    @property
    def loop_length(self) -> int:
        """
        :return: The number of edges in each loop cycle.
        """
        return self._loop_length

    @property
    def line_amplitudes(self) -> NDArray[np.complex128]:
        """
        :return: View of the columns forming the coin space of each line vertex.
        """
        return self.amplitudes[:, :self.n]

    @property
    def interior_amplitudes(self) -> NDArray[np.complex128]:
        """
        :return: View of the loop interior columns shaped (position, loop - 1, depth - 1).
        """
        return self.amplitudes[:, self.n:].reshape(self.t_cap + 1, self.n - 1, self.loop_length - 1)

    def amplitude(self, position: int, label: Edge_Label) -> complex:
        """
        :param position: The base position of the edge.
        :param label: The edge label.
        :return: The amplitude on that edge.
        """
        return complex(self.amplitudes[position, label.column(self.n, self.loop_length)])

    def norm(self) -> float:
        """
        :return: The Euclidean norm of the state.
        """
        return float(np.linalg.norm(self.amplitudes))

    def highest_occupied_position(self) -> int:
        """
        :return: The largest position with nonzero amplitude, or -1 for the zero vector.
        """
        occupied = np.flatnonzero(np.any(self.amplitudes != 0, axis=1))
        if len(occupied) == 0:
            return -1
        return int(occupied[-1])

    def copy(self):
        """
        :return: An independent copy of this state.
        """
        return Full_State(self.n, self.t_cap, self.loop_length, self.amplitudes.copy())

    def __repr__(self):
        return f"Full_State(n={self.n}, t_cap={self.t_cap}, loop_length={self.loop_length}, norm={self.norm():.15g})"
