"""Flower pollination optimizer for single-objective box-bounded problems.

Each population member is updated once per iteration, in index order. With
probability p the member takes a global move toward the population best,
scaled componentwise by a Levy step vector (long jumps with heavy-tailed
lengths); otherwise it takes a local move along the difference of two
randomly chosen members scaled by a uniform factor. A candidate replaces its
member only when strictly better, so the population best is monotone. The
best solution used by global moves is re-resolved after each full sweep, not
mid-sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from floraopt.levy import LevyConfig, levy_step
from floraopt.problems import Bounds, ProblemDefinition


@dataclass
class FpaParams:
    """Engine settings; defaults follow the benchmark configuration
    (n=25, p=0.8, gamma=0.1, exponent=1.5)."""

    n: int = 25
    p: float = 0.8
    gamma: float = 0.1
    levy_exponent: float = 1.5
    max_iterations: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("population size must be >= 3 (local moves need two partners)")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("switch probability must lie in [0, 1]")
        if not self.gamma > 0.0:
            raise ValueError("gamma must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass
class Population:
    members: np.ndarray  # (n, d)
    fitness: np.ndarray  # (n,)
    best_index: int


@dataclass
class RunRecord:
    """Seeded convergence trace of one run."""

    best_per_iteration: np.ndarray
    evaluations_used: int
    final_best: tuple
    seed: int
    global_moves: int = 0
    local_moves: int = 0


def initialize(problem: ProblemDefinition, params: FpaParams, rng: np.random.Generator) -> Population:
    """Uniform-random population within bounds, fitness evaluated."""
    members = rng.uniform(
        problem.bounds.lower, problem.bounds.upper, size=(params.n, problem.d)
    )
    fitness = np.array([float(problem.evaluate(x)[0]) for x in members])
    return Population(members=members, fitness=fitness, best_index=int(np.argmin(fitness)))


def global_pollination(
    x_i: np.ndarray,
    g_best: np.ndarray,
    params: FpaParams,
    levy: LevyConfig,
    rng: np.random.Generator,
    bounds: Bounds,
) -> np.ndarray:
    """Move toward the population best, scaled componentwise by a Levy step."""
    step = levy_step(levy, len(x_i), rng)
    candidate = x_i + params.gamma * step * (g_best - x_i)
    return np.clip(candidate, bounds.lower, bounds.upper)


def local_pollination(
    x_i: np.ndarray,
    x_j: np.ndarray,
    x_k: np.ndarray,
    rng: np.random.Generator,
    bounds: Bounds,
) -> np.ndarray:
    """Move along the difference of two members, scaled by a uniform scalar."""
    eps = rng.random()
    candidate = x_i + eps * (x_j - x_k)
    return np.clip(candidate, bounds.lower, bounds.upper)


def _draw_partners(n: int, rng: np.random.Generator) -> tuple[int, int]:
    # uniform pair without replacement; i may coincide with either partner
    j = int(rng.integers(n))
    k = int(rng.integers(n - 1))
    if k >= j:
        k += 1
    return j, k


def iterate(
    pop: Population,
    problem: ProblemDefinition,
    params: FpaParams,
    rng: np.random.Generator,
    levy: Optional[LevyConfig] = None,
    move_counter: Optional[dict] = None,
) -> Population:
    """One full population sweep; mutates and returns pop.

    Candidates are clamped to bounds, evaluated once, and adopted only when
    strictly better than the incumbent. best_index is recomputed after the
    sweep.
    """
    if levy is None:
        levy = LevyConfig(exponent=params.levy_exponent)
    members, fitness = pop.members, pop.fitness
    g_best = members[pop.best_index].copy()
    for i in range(params.n):
        if rng.random() < params.p:
            candidate = global_pollination(members[i], g_best, params, levy, rng, problem.bounds)
            if move_counter is not None:
                move_counter["global"] += 1
        else:
            j, k = _draw_partners(params.n, rng)
            candidate = local_pollination(members[i], members[j], members[k], rng, problem.bounds)
            if move_counter is not None:
                move_counter["local"] += 1
        f_cand = float(problem.evaluate(candidate)[0])
        if f_cand < fitness[i]:
            members[i] = candidate
            fitness[i] = f_cand
    pop.best_index = int(np.argmin(fitness))
    return pop


def run(
    problem: ProblemDefinition,
    params: FpaParams,
    levy: Optional[LevyConfig] = None,
) -> RunRecord:
    """Full optimization run: initialization plus max_iterations sweeps.

    The problem must be single-objective and unconstrained (wrap constraints
    into a penalized objective before calling). Exactly n*(1+max_iterations)
    evaluations are spent.
    """
    if problem.m != 1:
        raise ValueError("run() handles single-objective problems only")
    if problem.constrained:
        raise ValueError("run() does not handle constraints; penalize the objective instead")
    if levy is None:
        levy = LevyConfig(exponent=params.levy_exponent)
    rng = np.random.default_rng(params.seed)
    counter = {"global": 0, "local": 0}
    pop = initialize(problem, params, rng)
    trace = np.empty(params.max_iterations)
    for t in range(params.max_iterations):
        iterate(pop, problem, params, rng, levy, counter)
        trace[t] = pop.fitness[pop.best_index]
    best = pop.best_index
    return RunRecord(
        best_per_iteration=trace,
        evaluations_used=params.n * (1 + params.max_iterations),
        final_best=(pop.members[best].copy(), float(pop.fitness[best])),
        seed=params.seed,
        global_moves=counter["global"],
        local_moves=counter["local"],
    )
