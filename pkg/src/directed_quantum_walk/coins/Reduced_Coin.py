"""Module containing the two dimensional coin acting on the forward edge and the uniform loop superposition."""
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from directed_quantum_walk.walk_exceptions.coin_exceptions import Reduced_Dimension_Exception


@dataclass(frozen=True)
class Reduced_Coin:
    """
    The coin [[beta, alpha], [alpha, -beta]] on the labels (Forward, LoopSuper).
    alpha: sqrt((n-1)/n), the amplitude exchanged between the forward edge and the loops.
    beta: 1/sqrt(n), the amplitude kept by the forward edge.
    """
    alpha: float
    beta: float

    @property
    def matrix(self) -> NDArray[np.float64]:
        """
        :return: The real 2 by 2 coin matrix.
        """
        return np.array([[self.beta, self.alpha], [self.alpha, -self.beta]], dtype=np.float64)

    def orthogonality_deviation(self) -> float:
        """
        :return: Largest entry magnitude of C'C' - I. The coin is symmetric and self-inverse.
        """
        matrix = self.matrix
        return float(np.max(np.abs(matrix @ matrix - np.eye(2))))


def reduced_coin(n: int) -> Reduced_Coin:
    """
    :param n: Dimension of the full coin. Must leave at least one loop.
    :return: The reduced coin for a line with n-1 loops per vertex.
    """
    if n < 2:
        raise Reduced_Dimension_Exception(n)
    return Reduced_Coin(alpha=math.sqrt((n - 1) / n), beta=1.0 / math.sqrt(n))
