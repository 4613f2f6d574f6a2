"""Module containing the Position_Distribution class and the distributions of the quantum and classical walks."""
import numpy as np
from numpy.typing import NDArray

from directed_quantum_walk.walk_exceptions.state_exceptions import Walk_Configuration_Exception


class Position_Distribution:
    """Probabilities of finding the walker at positions 0..len-1, marginalized over edge labels."""

    def __init__(self, probabilities: NDArray[np.float64]):
        self._probabilities: NDArray[np.float64] = np.array(probabilities, dtype=np.float64)
        self._probabilities.setflags(write=False)

    @property
    def probabilities(self) -> NDArray[np.float64]:
        """
        :return: Read-only array of probabilities indexed by position.
        """
        return self._probabilities

    @property
    def positions(self) -> NDArray[np.int64]:
        """
        :return: The positions the probabilities are indexed by.
        """
        return np.arange(len(self._probabilities))

    @property
    def total(self) -> float:
        """
        :return: The sum of all probabilities.
        """
        return float(np.sum(self._probabilities))

    @property
    def mean(self) -> float:
        """
        :return: Expected position.
        """
        return float(np.dot(self.positions, self._probabilities))

    @property
    def variance(self) -> float:
        """
        :return: Second central moment of the position.
        """
        deviation = self.positions - self.mean
        return float(np.dot(deviation * deviation, self._probabilities))

    def __len__(self):
        return len(self._probabilities)

    def __getitem__(self, position: int) -> float:
        return float(self._probabilities[position])

    def __iter__(self):
        return iter(float(p) for p in self._probabilities)

    def __repr__(self):
        return f"Position_Distribution(positions=0..{len(self) - 1}, mean={self.mean:.6g})"


def position_distribution(state) -> Position_Distribution:
    """
    :param state: A Full_State or Reduced_State. Every column of a row belongs to that row's position.
    :return: The probability of each position, summed over edge labels.
    """
    amplitudes = state.amplitudes
    return Position_Distribution(np.sum(amplitudes.real ** 2 + amplitudes.imag ** 2, axis=1))


def expected_position(distribution: Position_Distribution) -> float:
    """
    :param distribution: A normalized distribution.
    :return: The sum of x P(x).
    """
    return distribution.mean


def classical_distribution(n: int, t: int) -> Position_Distribution:
    """
    The exact law of the classical walk, which moves forward with probability 1/n and otherwise takes a loop.
    Computed by convolving one step at a time, giving the binomial law of t trials with success 1/n.
    :param n: Number of edges leaving each vertex.
    :param t: Number of steps.
    :return: The distribution over positions 0..t.
    """
    if n < 1:
        raise Walk_Configuration_Exception("n", n)
    if t < 0:
        raise Walk_Configuration_Exception("t", t)
    forward = 1.0 / n
    stay = 1.0 - forward
    probabilities = np.zeros(t + 1, dtype=np.float64)
    probabilities[0] = 1.0
    for step in range(t):
        reached = probabilities[:step + 2].copy()
        probabilities[:step + 2] = reached * stay
        probabilities[1:step + 2] += reached[:step + 1] * forward
    return Position_Distribution(probabilities)
