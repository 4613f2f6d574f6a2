"""Multi-configuration sweeps over coin dimensions, walk modes and pairing seeds."""
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from directed_quantum_walk.reduced_walk.reduced_evolution import evolve_reduced
from directed_quantum_walk.walk_analysis.Interval_Bound import interval_bounds, moments, tail_mass
from directed_quantum_walk.walk_analysis.Sweep_Record import Sweep_Record, Walk_Mode
from directed_quantum_walk.walk_engine.Directed_Quantum_Walk import evolve
from directed_quantum_walk.walk_engine.Edge_Pairing import Pairing_Mode
from directed_quantum_walk.walk_engine.Position_Distribution import Position_Distribution, classical_distribution, position_distribution
from directed_quantum_walk.walk_engine.Walk_Configuration import Walk_Configuration
from directed_quantum_walk.walk_exceptions.state_exceptions import Walk_Configuration_Exception
from directed_quantum_walk.walk_warnings.walk_warnings import Reduced_Substitution_Warning

FULL_MODE_LIMIT = 64


@dataclass(frozen=True)
class Sweep_Job:
    """One independent walk of a sweep."""
    n: int
    t: int
    mode: Walk_Mode
    pairing: Pairing_Mode | None
    seed: int | None
    loop_length: int = 1
    use_reduced: bool = False
    rerandomize_pairing: bool = False


def run_distribution(job: Sweep_Job) -> Position_Distribution:
    """
    :param job: The walk to run.
    :return: The final position distribution of the walk.
    """
    if job.mode is Walk_Mode.Classical:
        return classical_distribution(job.n, job.t)
    elif job.mode is Walk_Mode.Reduced or job.use_reduced:
        return position_distribution(evolve_reduced(job.n, job.t))
    config = Walk_Configuration(n=job.n, t=job.t, pairing_mode=job.pairing, seed=job.seed, loop_length=job.loop_length,
                                rerandomize_pairing=job.rerandomize_pairing)
    return position_distribution(evolve(config))


def run_job(job: Sweep_Job, keep_distribution: bool = False) -> Sweep_Record:
    """
    :param job: The walk to run.
    :param keep_distribution: If True, the full distribution is attached to the record.
    :return: Summary record of the walk.
    """
    distribution = run_distribution(job)
    mean, variance = moments(distribution)
    interval_lo = interval_hi = tail = None
    if job.mode is not Walk_Mode.Classical and job.n >= 2:
        bound = interval_bounds(job.n, job.t)
        interval_lo, interval_hi = bound.lo, bound.hi
        tail = tail_mass(distribution, bound)
    return Sweep_Record(n=job.n, t=job.t, mode=job.mode, pairing=job.pairing, seed=job.seed,
                        mean=mean, variance=variance, interval_lo=interval_lo, interval_hi=interval_hi, tail_mass=tail,
                        loop_length=job.loop_length, distribution=distribution if keep_distribution else None)


def sweep_jobs(n_list: Iterable[int], t: int, modes: Sequence[Walk_Mode], pairing: Pairing_Mode = Pairing_Mode.Natural,
               seeds: Sequence[int] = (), loop_length: int = 1, full_mode_limit: int = FULL_MODE_LIMIT) -> list[Sweep_Job]:
    """
    Seeds only multiply quantum walks with random pairing; every other walk is deterministic and runs once.
    Natural pairing quantum walks with plain loops and n above full_mode_limit run the reduced walk instead, with a warning.
    :return: The jobs of the sweep in input order, coin dimension first, then mode, then seed.
    """
    if t < 0:
        raise Walk_Configuration_Exception("t", t)
    jobs: list[Sweep_Job] = []
    for n in n_list:
        for mode in modes:
            if mode is not Walk_Mode.Quantum:
                jobs.append(Sweep_Job(n, t, mode, None, None))
            elif pairing is Pairing_Mode.Random:
                if len(seeds) == 0:
                    raise Walk_Configuration_Exception("seeds", tuple(seeds))
                jobs.extend(Sweep_Job(n, t, mode, pairing, seed, loop_length) for seed in seeds)
            else:
                use_reduced = n > full_mode_limit and loop_length == 1
                if use_reduced:
                    warnings.warn(Reduced_Substitution_Warning(n, full_mode_limit))
                jobs.append(Sweep_Job(n, t, mode, pairing, None, loop_length, use_reduced))
    return jobs


def sweep(n_list: Iterable[int], t: int = 100, modes: Sequence[Walk_Mode] = (Walk_Mode.Classical, Walk_Mode.Quantum),
          pairing: Pairing_Mode = Pairing_Mode.Natural, seeds: Sequence[int] = (), loop_length: int = 1,
          full_mode_limit: int = FULL_MODE_LIMIT, max_workers: int | None = None, keep_distributions: bool = False) -> list[Sweep_Record]:
    """
    Runs every walk of the sweep as an independent job.
    :param n_list: Coin dimensions to sweep.
    :param t: Number of steps of every walk.
    :param modes: Walk modes to run for every n.
    :param pairing: Pairing of quantum walks.
    :param seeds: Seeds of random pairings.
    :param loop_length: Number of edges of each loop cycle in quantum walks.
    :param full_mode_limit: Largest n simulated with the full walk under natural pairing.
    :param max_workers: Size of the worker pool. None lets the executor decide.
    :param keep_distributions: If True, each record carries its full position distribution.
    :return: One record per job, ordered by input order regardless of completion order.
    """
    jobs = sweep_jobs(n_list, t, modes, pairing, seeds, loop_length, full_mode_limit)
    if len(jobs) == 0:
        return []
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(lambda job: run_job(job, keep_distributions), jobs))


def tail_decay(n: int, times: Iterable[int]) -> list[tuple[int, float]]:
    """
    The quantum tail outside the concentration interval at several times, using the reduced walk.
    :param n: Dimension of the coin, at least 2.
    :param times: Step counts to measure.
    :return: (t, tail mass) pairs in the order given.
    """
    return [(t, tail_mass(position_distribution(evolve_reduced(n, t)), interval_bounds(n, t))) for t in times]


@dataclass(frozen=True)
class Transport_Speed:
    """Mean position per step of the classical and quantum walks with the same coin dimension."""
    n: int
    t: int
    classical_speed: float
    quantum_speed: float
    interval_lo_speed: float
    interval_hi_speed: float


def speed_table(n_list: Iterable[int], t: int = 100) -> list[Transport_Speed]:
    """
    :param n_list: Coin dimensions, each at least 2.
    :param t: Number of steps, at least 1.
    :return: Classical mean/t against quantum mean/t for every n, the quantum walk run in reduced form.
    """
    if t < 1:
        raise Walk_Configuration_Exception("t", t)
    table = []
    for n in n_list:
        bound = interval_bounds(n, t)
        quantum = position_distribution(evolve_reduced(n, t))
        table.append(Transport_Speed(n, t, classical_distribution(n, t).mean / t, quantum.mean / t, bound.lo / t, bound.hi / t))
    return table
