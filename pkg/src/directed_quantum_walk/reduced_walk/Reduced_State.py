"""Module containing the Reduced_State class."""
import numpy as np
from numpy.typing import NDArray

from directed_quantum_walk.walk_exceptions.coin_exceptions import Reduced_Dimension_Exception
from directed_quantum_walk.walk_exceptions.state_exceptions import Walk_Configuration_Exception


class Reduced_State:
    """
    Amplitudes over (position 0..t_cap, label) with label 0 the forward edge
    and label 1 the normalized uniform superposition of the n-1 loops at that position.
    """
    FORWARD = 0
    LOOP_SUPER = 1

    def __init__(self, n: int, t_cap: int, amplitudes: NDArray[np.complex128] | None = None):
        if n < 2:
            raise Reduced_Dimension_Exception(n)
        if t_cap < 0:
            raise Walk_Configuration_Exception("t_cap", t_cap)
        self._n: int = n
        self._t_cap: int = t_cap
        if amplitudes is None:
            amplitudes = np.zeros((t_cap + 1, 2), dtype=np.complex128)
        else:
            amplitudes = np.asarray(amplitudes, dtype=np.complex128)
            assert amplitudes.shape == (t_cap + 1, 2), f"Amplitudes of shape {amplitudes.shape} do not match {(t_cap + 1, 2)}"
        self.amplitudes: NDArray[np.complex128] = amplitudes

    @property
    def n(self) -> int:
        """
        :return: Dimension of the full coin this state reduces.
        """
        return self._n

    @property
    def t_cap(self) -> int:
        """
        :return: The largest position the state can hold amplitude on.
        """
        return self._t_cap

    @property
    def forward(self) -> NDArray[np.complex128]:
        """
        :return: View of the forward edge amplitudes by position.
        """
        return self.amplitudes[:, Reduced_State.FORWARD]

    @property
    def loop_super(self) -> NDArray[np.complex128]:
        """
        :return: View of the loop superposition amplitudes by position.
        """
        return self.amplitudes[:, Reduced_State.LOOP_SUPER]

    def norm(self) -> float:
        """
        :return: The Euclidean norm of the state.
        """
        return float(np.linalg.norm(self.amplitudes))

    def copy(self):
        """
        :return: An independent copy of this state.
        """
        return Reduced_State(self.n, self.t_cap, self.amplitudes.copy())

    def __repr__(self):
        return f"Reduced_State(n={self.n}, t_cap={self.t_cap}, norm={self.norm():.15g})"
