"""Module containing the pairings of incoming and outgoing edge slots that define the shift operator."""
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from directed_quantum_walk.walk_exceptions.state_exceptions import Pairing_Coverage_Exception


class Pairing_Mode(Enum):
    """How incoming edges at each line vertex are paired with outgoing edges."""
    Natural = "natural"
    Random = "random"

    def __str__(self):
        return self.value

    def __repr__(self):
        return self.value

    @staticmethod
    def from_string(mode_str: str):
        """
        :param mode_str: "natural" or "random".
        :return: The pairing mode named by the string.
        """
        return Pairing_Mode(mode_str.strip().lower())


class Edge_Pairing:
    """
    Per line vertex bijections from incoming slots to outgoing slots.
    Incoming slot 0 is the line edge arriving from x-1 and slot k is loop k returning to x.
    Outgoing slot 0 is the line edge leaving to x+1 and slot k is loop k leaving x.
    permutations[x, s] is the outgoing slot receiving the amplitude that arrives at x on incoming slot s.
    """

    def __init__(self, permutations: NDArray[np.int64], mode: Pairing_Mode = Pairing_Mode.Natural, seed=None):
        permutations = np.array(permutations, dtype=np.int64)
        if permutations.ndim != 2 or permutations.shape[0] < 1 or permutations.shape[1] < 1:
            raise Pairing_Coverage_Exception(f"Pairing permutations must be a non-empty (vertices, n) array, got shape {permutations.shape}")
        expected = np.arange(permutations.shape[1])
        not_bijective = np.flatnonzero(np.any(np.sort(permutations, axis=1) != expected, axis=1))
        if len(not_bijective) > 0:
            raise Pairing_Coverage_Exception(f"Pairing at vertex {int(not_bijective[0])} is not a bijection: {permutations[not_bijective[0]].tolist()}")
        # the shift skips the table under natural pairing
        if mode is Pairing_Mode.Natural:
            not_identity = np.flatnonzero(np.any(permutations != expected, axis=1))
            if len(not_identity) > 0:
                raise Pairing_Coverage_Exception(f"Natural pairing must be the identity, but vertex {int(not_identity[0])} "
                                                 f"pairs {permutations[not_identity[0]].tolist()}")
        permutations.setflags(write=False)
        self._permutations: NDArray[np.int64] = permutations
        self.mode: Pairing_Mode = mode
        self.seed = seed

    @property
    def permutations(self) -> NDArray[np.int64]:
        """
        :return: Read-only (x_max + 1, n) array of per vertex slot permutations.
        """
        return self._permutations

    @property
    def n(self) -> int:
        """
        :return: The number of slots at each vertex.
        """
        return self._permutations.shape[1]

    @property
    def x_max(self) -> int:
        """
        :return: The largest line vertex covered by the pairing.
        """
        return self._permutations.shape[0] - 1

    @property
    def is_identity(self) -> bool:
        """
        :return: True if every vertex pairs each incoming slot with the outgoing slot of the same index.
        """
        return bool(np.all(self._permutations == np.arange(self.n)))

    def permutation_at(self, x: int) -> tuple[int, ...]:
        """
        :param x: A line vertex.
        :return: The permutation of slots at x.
        """
        return tuple(int(s) for s in self._permutations[x])

    def __repr__(self):
        return f"Edge_Pairing(mode={self.mode}, n={self.n}, x_max={self.x_max}, seed={self.seed!r})"


def natural_pairing(n: int, x_max: int) -> Edge_Pairing:
    """
    :param n: The number of slots per vertex.
    :param x_max: The largest line vertex to cover.
    :return: The pairing of the line edge with itself and each loop with itself.
    """
    return Edge_Pairing(np.tile(np.arange(n, dtype=np.int64), (x_max + 1, 1)), Pairing_Mode.Natural)


def make_random_pairing(n: int, x_max: int, seed: int | np.random.SeedSequence) -> Edge_Pairing:
    """
    Draws an independent uniformly random permutation of the n slots at every line vertex 0..x_max.
    Vertex 0 receives a permutation too; its incoming line slot simply never carries amplitude.
    The generator is numpy's default PCG64 bit generator seeded with the given seed,
    so equal arguments give identical pairings.
    :param n: The number of slots per vertex.
    :param x_max: The largest line vertex to cover.
    :param seed: Seed of the generator.
    :return: A random pairing, fixed for the lifetime of a walk.
    """
    if n < 1:
        raise Pairing_Coverage_Exception(f"A pairing needs at least one slot per vertex, got n={n}")
    rng = np.random.default_rng(seed)
    slots = np.tile(np.arange(n, dtype=np.int64), (x_max + 1, 1))
    return Edge_Pairing(rng.permuted(slots, axis=1), Pairing_Mode.Random, seed)


def random_pairing_schedule(n: int, x_max: int, seed: int, steps: int) -> list[Edge_Pairing]:
    """
    Pairings for a walk that redraws its pairing at every step.
    Step k uses the k-th child of numpy.random.SeedSequence(seed).
    :param n: The number of slots per vertex.
    :param x_max: The largest line vertex to cover.
    :param seed: Root seed of the schedule.
    :param steps: Number of pairings to draw.
    :return: One pairing per step.
    """
    return [make_random_pairing(n, x_max, child) for child in np.random.SeedSequence(seed).spawn(steps)]
