"""The verification suite: numerical invariants of every module checked against fixed thresholds."""
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from directed_quantum_walk.coins.Coin_Matrix import Coin_Matrix, fourier_coin
from directed_quantum_walk.coins.Reduced_Coin import reduced_coin
from directed_quantum_walk.line_graph.Directed_Graph import Directed_Graph
from directed_quantum_walk.line_graph.Line_With_Loops_Specification import Line_With_Loops_Specification, build_line_with_loops, interior_vertices
from directed_quantum_walk.line_graph.Realizability_Report import check_unitary_realizable
from directed_quantum_walk.reduced_walk.reduced_evolution import equivalence_check, project_to_reduced
from directed_quantum_walk.walk_engine.Directed_Quantum_Walk import Directed_Quantum_Walk
from directed_quantum_walk.walk_engine.Edge_Label import Edge_Label
from directed_quantum_walk.walk_engine.Edge_Pairing import Pairing_Mode, natural_pairing
from directed_quantum_walk.walk_engine.Full_State import Full_State
from directed_quantum_walk.walk_engine.Position_Distribution import classical_distribution
from directed_quantum_walk.walk_engine.Walk_Configuration import Walk_Configuration
from directed_quantum_walk.walk_engine.walk_evolution import step
from directed_quantum_walk.walk_warnings.walk_warnings import Norm_Drift_Warning


class Verification_Depth(Enum):
    """How much of the parameter space the verification suite covers."""
    Quick = "quick"
    Full = "full"

    def __str__(self):
        return self.value

    def __repr__(self):
        return self.value

    @staticmethod
    def from_string(depth_str: str):
        """
        :param depth_str: "quick" or "full".
        :return: The depth named by the string.
        """
        return Verification_Depth(depth_str.strip().lower())


@dataclass(frozen=True)
class Verification_Check:
    """One measured value compared against its threshold. A check passes when measured < threshold."""
    name: str
    measured: float
    threshold: float

    @property
    def passed(self) -> bool:
        """
        :return: True if the measured value is below the threshold.
        """
        return self.measured < self.threshold

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: measured {self.measured:.3e} threshold {self.threshold:.1e}"


@dataclass(frozen=True)
class Verification_Report:
    """All checks of one verification run."""
    depth: Verification_Depth
    checks: tuple[Verification_Check, ...]

    @property
    def passed(self) -> bool:
        """
        :return: True if every check passed.
        """
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[Verification_Check]:
        """
        :return: The checks that failed.
        """
        return [check for check in self.checks if not check.passed]

    def __str__(self):
        lines = [str(check) for check in self.checks]
        lines.append(f"{len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed ({self.depth})")
        return "\n".join(lines)


@dataclass(frozen=True)
class _Suite_Parameters:
    unitarity_max_n: int
    reduced_max_n: int
    norm_dimensions: tuple[int, ...]
    norm_steps: int
    closure_dimensions: tuple[int, ...]
    closure_steps: int
    equivalence_dimensions: tuple[int, ...]
    equivalence_steps: int
    classical_times: tuple[int, ...]


_SUITES = {
    Verification_Depth.Quick: _Suite_Parameters(32, 64, (2, 8), 200, (4,), 200, (4, 16), 100, (10, 100)),
    Verification_Depth.Full: _Suite_Parameters(256, 1024, (2, 16, 64), 1000, (2, 16, 64), 1000, (2, 4, 16, 64), 200, (10, 100, 1000)),
}
_ALGEBRA_DIMENSIONS = (2, 3, 4, 8, 16, 64)
_CLASSICAL_DIMENSIONS = (1, 2, 4, 8, 16, 32, 64)


def check_unitarity(coin_factory: Callable[[int], Coin_Matrix], max_n: int) -> Verification_Check:
    """
    :return: Largest deviation of C†C from the identity over coins of dimension 1..max_n.
    """
    measured = max(coin_factory(n).unitarity_deviation() for n in range(1, max_n + 1))
    return Verification_Check(f"coin unitarity n<={max_n}", measured, 1e-12)


def check_reduced_orthogonality(max_n: int) -> Verification_Check:
    """
    :return: Largest deviation of C'C' from the identity over reduced coins for n in 2..max_n.
    """
    measured = max(reduced_coin(n).orthogonality_deviation() for n in range(2, max_n + 1))
    return Verification_Check(f"reduced coin orthogonality n<={max_n}", measured, 1e-14)


def one_step_error(coin: Coin_Matrix, x: int = 1) -> float:
    """
    One step from the forward edge and from the loop superposition at x against their exact images under the natural pairing.
    :param coin: Coin of dimension n >= 2.
    :param x: Position of the start state.
    :return: Largest entry error of either image.
    """
    n = coin.dim
    t_cap = x + 1
    beta, alpha = 1.0 / math.sqrt(n), math.sqrt((n - 1) / n)
    pairing = natural_pairing(n, t_cap)
    error = 0.0
    for start, forward_coefficient, loop_coefficient in (
            (Full_State.basis_state(n, t_cap, x, Edge_Label.forward()), beta, alpha),
            (Full_State.loop_superposition_state(n, t_cap, x), alpha, -beta)):
        expected = Full_State(n, t_cap)
        expected.amplitudes[x + 1, 0] = forward_coefficient
        expected.amplitudes[x, 1:n] = loop_coefficient / math.sqrt(n - 1)
        image = step(start, coin, pairing)
        error = max(error, float(np.max(np.abs(image.amplitudes - expected.amplitudes))))
    return error


def check_one_step_algebra(coin_factory: Callable[[int], Coin_Matrix]) -> Verification_Check:
    """
    :return: Largest one step error over the tested coin dimensions.
    """
    measured = max(one_step_error(coin_factory(n)) for n in _ALGEBRA_DIMENSIONS)
    return Verification_Check("one step algebra", measured, 1e-13)


def max_norm_drift(config: Walk_Configuration, coin: Coin_Matrix) -> float:
    """
    :param config: The walk to run.
    :param coin: The coin to run it with.
    :return: Largest |norm - 1| over every step of the walk.
    """
    walk = Directed_Quantum_Walk(config, coin)
    drift = 0.0
    while walk.steps_remaining > 0:
        drift = max(drift, abs(walk.step().norm() - 1.0))
    return drift


def check_norm_conservation(coin_factory: Callable[[int], Coin_Matrix], dimensions: tuple[int, ...], steps: int) -> Verification_Check:
    """
    :return: Largest norm drift of natural and random pairing walks.
    """
    drift = 0.0
    for n in dimensions:
        coin = coin_factory(n)
        drift = max(drift, max_norm_drift(Walk_Configuration(n=n, t=steps), coin))
        drift = max(drift, max_norm_drift(Walk_Configuration(n=n, t=steps, pairing_mode=Pairing_Mode.Random, seed=n), coin))
    return Verification_Check(f"norm conservation t={steps}", drift, 1e-9)


def check_subspace_closure(dimensions: tuple[int, ...], steps: int) -> Verification_Check:
    """
    :return: Largest norm outside the forward and loop superposition subspace over every step of natural pairing walks.
    """
    residual = 0.0
    for n in dimensions:
        walk = Directed_Quantum_Walk(Walk_Configuration(n=n, t=steps))
        while walk.steps_remaining > 0:
            residual = max(residual, project_to_reduced(walk.step())[1])
    return Verification_Check(f"subspace closure t<={steps}", residual, 1e-11)


def check_equivalence(dimensions: tuple[int, ...], steps: int) -> Verification_Check:
    """
    :return: Largest amplitude difference between the projected full walk and the reduced walk.
    """
    measured = max(equivalence_check(n, steps).max_amplitude_diff for n in dimensions)
    return Verification_Check(f"reduced walk equivalence t={steps}", measured, 1e-9)


def check_classical_mean(times: tuple[int, ...]) -> Verification_Check:
    """
    :return: Largest |<x> - t/n| of the classical walk.
    """
    measured = max(abs(classical_distribution(n, t).mean - t / n) for n in _CLASSICAL_DIMENSIONS for t in times)
    return Verification_Check("classical mean t/n", measured, 1e-9)


def check_classical_normalization(times: tuple[int, ...]) -> Verification_Check:
    """
    :return: Largest |sum P - 1| of the classical walk.
    """
    measured = max(abs(classical_distribution(n, t).total - 1.0) for n in _CLASSICAL_DIMENSIONS for t in times)
    return Verification_Check("classical normalization", measured, 1e-10)


def check_realizability() -> Verification_Check:
    """
    Counts failures: unbalanced interior vertices of generated lines, and an unbalanced graph that was accepted.
    :return: The failure count against a threshold of one.
    """
    failures = 0
    for n in (1, 2, 4, 8):
        for loop_length in (1, 2, 3):
            spec = Line_With_Loops_Specification(n=n, x_max=6, loop_length=loop_length)
            failures += len(check_unitary_realizable(build_line_with_loops(spec), interior_vertices(spec)).unbalanced)
    if check_unitary_realizable(Directed_Graph(2, ((0, 1),))).is_realizable:
        failures += 1
    return Verification_Check("realizability", float(failures), 1.0)


def run_verification(depth: Verification_Depth = Verification_Depth.Quick,
                     coin_factory: Callable[[int], Coin_Matrix] = fourier_coin) -> Verification_Report:
    """
    :param depth: Quick or full parameter coverage.
    :param coin_factory: Builds the coin of each dimension. Replacing it injects a faulty coin into the coin dependent checks.
    :return: Report of every check.
    """
    suite = _SUITES[depth]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", Norm_Drift_Warning)
        checks = (
            check_unitarity(coin_factory, suite.unitarity_max_n),
            check_reduced_orthogonality(suite.reduced_max_n),
            check_one_step_algebra(coin_factory),
            check_norm_conservation(coin_factory, suite.norm_dimensions, suite.norm_steps),
            check_subspace_closure(suite.closure_dimensions, suite.closure_steps),
            check_equivalence(suite.equivalence_dimensions, suite.equivalence_steps),
            check_classical_mean(suite.classical_times),
            check_classical_normalization(suite.classical_times),
            check_realizability(),
        )
    return Verification_Report(depth, checks)
