import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from directed_quantum_walk.coins.Reduced_Coin import reduced_coin
from directed_quantum_walk.reduced_walk.Reduced_State import Reduced_State
from directed_quantum_walk.reduced_walk.reduced_evolution import equivalence_check, evolve_reduced, project_to_reduced, reduced_initial_state, reduced_step
from directed_quantum_walk.walk_engine.Directed_Quantum_Walk import Directed_Quantum_Walk, evolve
from directed_quantum_walk.walk_engine.Edge_Label import Edge_Label
from directed_quantum_walk.walk_engine.Full_State import Full_State
from directed_quantum_walk.walk_engine.Position_Distribution import position_distribution
from directed_quantum_walk.walk_engine.Walk_Configuration import Walk_Configuration
from directed_quantum_walk.walk_exceptions.coin_exceptions import Reduced_Dimension_Exception
from directed_quantum_walk.walk_exceptions.state_exceptions import Capacity_Exception, Loop_Length_Exception


def test_one_reduced_step_with_two_dimensional_coin():
    state = evolve_reduced(2, 1)
    assert state.forward[1] == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert state.loop_super[0] == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert np.count_nonzero(state.amplitudes) == 2


@pytest.mark.parametrize("n", [2, 3, 64])
def test_zero_steps_is_initial_state(n):
    assert np.array_equal(evolve_reduced(n, 0).amplitudes, reduced_initial_state(n, 0).amplitudes)


def test_reduced_walk_of_two_steps():
    np.testing.assert_allclose(position_distribution(evolve_reduced(2, 2)).probabilities, [0.25, 0.5, 0.25], atol=1e-15)


def test_reduced_walk_concentrates_in_interval():
    distribution = position_distribution(evolve_reduced(4, 100))
    assert np.sum(distribution.probabilities[25:76]) >= 0.9


def test_reduced_norm_conserved_over_ten_thousand_steps():
    assert abs(evolve_reduced(16, 10_000).norm() - 1.0) < 1e-10


def test_reduced_step_raises_when_amplitude_would_leave():
    state = Reduced_State(3, 2)
    state.amplitudes[2, Reduced_State.FORWARD] = 1.0
    with pytest.raises(Capacity_Exception):
        reduced_step(state, reduced_coin(3))


def test_reduced_walk_requires_loops():
    with pytest.raises(Reduced_Dimension_Exception):
        evolve_reduced(1, 5)
    with pytest.raises(Reduced_Dimension_Exception):
        Reduced_State(1, 5)


def test_projection_of_initial_state():
    full = Full_State.basis_state(4, 3, 0, Edge_Label.forward())
    reduced, residual = project_to_reduced(full)
    assert np.array_equal(reduced.amplitudes, reduced_initial_state(4, 3).amplitudes)
    assert residual == 0.0


def test_projection_of_antisymmetric_loops():
    full = Full_State(3, 1)
    full.amplitudes[0, 1] = 1 / math.sqrt(2)
    full.amplitudes[0, 2] = -1 / math.sqrt(2)
    reduced, residual = project_to_reduced(full)
    assert abs(reduced.loop_super[0]) < 1e-15
    assert residual == pytest.approx(1.0, abs=1e-15)


def test_projection_of_loop_superposition():
    reduced, residual = project_to_reduced(Full_State.loop_superposition_state(5, 2, 1))
    assert reduced.loop_super[1] == pytest.approx(1.0, abs=1e-15)
    assert residual < 1e-15


def test_projection_rejects_discretized_loops():
    with pytest.raises(Loop_Length_Exception):
        project_to_reduced(Full_State(3, 2, loop_length=2))
    with pytest.raises(Reduced_Dimension_Exception):
        project_to_reduced(Full_State(1, 2))


@pytest.mark.parametrize("n", [3, 64])
def test_full_walk_stays_in_reduced_subspace(n):
    walk = Directed_Quantum_Walk(Walk_Configuration(n=n, t=1000))
    worst = 0.0
    while walk.steps_remaining > 0:
        state = walk.step()
        if walk.steps_taken % 50 == 0:
            worst = max(worst, project_to_reduced(state)[1])
    assert worst < 1e-11


@settings(deadline=None, max_examples=20)
@given(n=st.integers(2, 40), t=st.integers(0, 80))
def test_projected_full_walk_matches_reduced_walk(n, t):
    projected, residual = project_to_reduced(evolve(Walk_Configuration(n=n, t=t)))
    assert residual < 1e-11
    assert np.max(np.abs(projected.amplitudes - evolve_reduced(n, t).amplitudes)) < 1e-10


@pytest.mark.parametrize("n", [2, 4, 16, 64])
def test_equivalence_at_two_hundred_steps(n):
    report = equivalence_check(n, 200)
    assert report.max_amplitude_diff < 1e-9
    assert report.residual_norm < 1e-11
    assert report.max_probability_diff < 1e-9
    assert report.passed


def test_equivalence_at_one_hundred_steps():
    assert equivalence_check(4, 100).max_amplitude_diff < 1e-10


def test_equivalence_of_two_steps():
    report = equivalence_check(2, 2)
    assert report.max_probability_diff < 1e-15
    assert "n=2 t=2" in str(report)


def test_two_dimensional_walks_have_equal_distributions():
    full = position_distribution(evolve(Walk_Configuration(n=2, t=300))).probabilities
    reduced = position_distribution(evolve_reduced(2, 300)).probabilities
    np.testing.assert_allclose(full, reduced, rtol=0, atol=1e-14)


def test_equivalence_requires_loops():
    with pytest.raises(Reduced_Dimension_Exception):
        equivalence_check(1, 10)
