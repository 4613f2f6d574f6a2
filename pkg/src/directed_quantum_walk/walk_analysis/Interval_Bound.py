"""Module containing the concentration interval of the quantum walk and the measurements taken against it."""
import math
from dataclasses import dataclass

import numpy as np

from directed_quantum_walk.walk_engine.Position_Distribution import Position_Distribution
from directed_quantum_walk.walk_exceptions.coin_exceptions import Reduced_Dimension_Exception
from directed_quantum_walk.walk_exceptions.state_exceptions import Walk_Configuration_Exception


@dataclass(frozen=True)
class Interval_Bound:
    """
    The interval [(1-beta)t/2, (1+beta)t/2] holding all but a super-polynomially small part of the quantum walk's probability.
    Integer positions x with lo <= x <= hi are inside.
    """
    lo: float
    hi: float
    beta: float
    t: int

    @property
    def width(self) -> float:
        """
        :return: hi - lo, which is beta t.
        """
        return self.hi - self.lo

    def contains(self, position: float) -> bool:
        """
        :param position: A position on the line.
        :return: True if the position lies in the closed interval.
        """
        return self.lo <= position <= self.hi

    def __str__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


def interval_bounds(n: int, t: int) -> Interval_Bound:
    """
    :param n: Dimension of the coin, at least 2.
    :param t: Number of steps.
    :return: The concentration interval for beta = 1/sqrt(n).
    """
    if n < 2:
        raise Reduced_Dimension_Exception(n)
    if t < 0:
        raise Walk_Configuration_Exception("t", t)
    beta = 1.0 / math.sqrt(n)
    return Interval_Bound(lo=(1.0 - beta) * t / 2.0, hi=(1.0 + beta) * t / 2.0, beta=beta, t=t)


def inside_mask(distribution: Position_Distribution, bound: Interval_Bound) -> np.ndarray:
    """
    :param distribution: A position distribution.
    :param bound: The interval.
    :return: Boolean mask of positions inside the closed interval.
    """
    positions = distribution.positions
    return (positions >= bound.lo) & (positions <= bound.hi)


def interval_mass(distribution: Position_Distribution, bound: Interval_Bound) -> float:
    """
    :param distribution: A normalized distribution.
    :param bound: The interval.
    :return: Probability of positions inside the interval, endpoints included.
    """
    return float(np.sum(distribution.probabilities[inside_mask(distribution, bound)]))


def tail_mass(distribution: Position_Distribution, bound: Interval_Bound) -> float:
    """
    :param distribution: A normalized distribution.
    :param bound: The interval.
    :return: Probability of positions strictly below lo or strictly above hi.
    """
    return float(np.sum(distribution.probabilities[~inside_mask(distribution, bound)]))


def moments(distribution: Position_Distribution) -> tuple[float, float]:
    """
    :param distribution: A normalized distribution.
    :return: The mean and variance of the position.
    """
    return distribution.mean, distribution.variance
