"""Module containing the Coin_Matrix class and the coins used by the directed walk."""
import numpy as np
from numpy.typing import NDArray

from directed_quantum_walk.walk_exceptions.coin_exceptions import Coin_Dimension_Exception, Non_Square_Coin_Exception


class Coin_Matrix:
    """
    An immutable dense n by n complex matrix acting on the edge labels leaving a vertex.
    Index 0 is the forward edge label, indices 1..n-1 are the loop labels.
    """

    def __init__(self, entries: NDArray[np.complex128]):
        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise Non_Square_Coin_Exception(entries.shape)
        if entries.shape[0] < 1:
            raise Coin_Dimension_Exception(entries.shape[0])
        entries.setflags(write=False)
        self._entries: NDArray[np.complex128] = entries

    @property
    def entries(self) -> NDArray[np.complex128]:
        """
        :return: Read-only view of the matrix entries.
        """
        return self._entries

    @property
    def dim(self) -> int:
        """
        :return: The dimension of the coin space the coin acts on.
        """
        return self._entries.shape[0]

    def __len__(self):
        return self.dim

    def __getitem__(self, item: tuple[int, int]) -> complex:
        return complex(self._entries[item])

    def unitarity_deviation(self) -> float:
        """
        :return: Largest entry magnitude of C†C - I.
        """
        product = self._entries.conj().T @ self._entries
        return float(np.max(np.abs(product - np.eye(self.dim))))

    def is_unitary(self, tolerance: float = 1e-12) -> bool:
        """
        :param tolerance: Allowed deviation of C†C from the identity.
        :return: True if the coin is unitary within tolerance.
        """
        return self.unitarity_deviation() < tolerance

    def __repr__(self):
        return f"Coin_Matrix(dim={self.dim})"


def fourier_coin(n: int) -> Coin_Matrix:
    """
    Entry (j, k) is ω^(jk)/√n with ω = e^(2πi/n).
    Each phase is evaluated from the cosine and sine of 2π(jk mod n)/n rather than by repeated multiplication.
    :param n: The coin dimension.
    :return: The n-dimensional discrete Fourier transform coin.
    """
    if n < 1:
        raise Coin_Dimension_Exception(n)
    index = np.arange(n)
    phase = 2.0 * np.pi * (np.outer(index, index) % n) / n
    return Coin_Matrix((np.cos(phase) + 1j * np.sin(phase)) / np.sqrt(n))


def identity_coin(n: int) -> Coin_Matrix:
    """
    :param n: The coin dimension.
    :return: The identity coin, which leaves every edge label unchanged.
    """
    if n < 1:
        raise Coin_Dimension_Exception(n)
    return Coin_Matrix(np.eye(n, dtype=np.complex128))
