"""Single-objective GA and PSO baselines with the benchmark parameter settings.

Both optimizers share the flower-pollination engine's run contract: box
bounds are enforced at every step, exactly n*(1+iterations) evaluations are
spent, and the reported best trace is non-increasing, so comparisons across
the three optimizers are evaluation-fair.

Operator details the benchmark configuration leaves open are fixed here as
baseline-definition choices, not claims about any reference method: the GA
uses binary tournament selection, whole-arithmetic crossover, per-gene
Gaussian mutation with sigma = 5% of the variable range, and elitism of one;
the PSO uses a global-best topology with zero initial velocities and a
velocity clamp of half the variable range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from floraopt.fpa import RunRecord
from floraopt.problems import ProblemDefinition

# Gaussian mutation scale, as a fraction of each variable's range.
GA_MUTATION_SCALE = 0.05


@dataclass
class GaParams:
    n: int = 25
    p_crossover: float = 0.95
    p_mutation: float = 0.05
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("population size must be >= 2")
        for label, p in (("p_crossover", self.p_crossover), ("p_mutation", self.p_mutation)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{label} must lie in [0, 1]")


@dataclass
class PsoParams:
    n: int = 25
    theta: float = 0.7
    beta1: float = 1.5
    beta2: float = 1.5
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("population size must be >= 2")
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError("inertia weight must lie in [0, 1]")
        if self.beta1 < 0.0 or self.beta2 < 0.0:
            raise ValueError("learning parameters must be non-negative")


def _check_problem(problem: ProblemDefinition):
    if problem.m != 1:
        raise ValueError("baselines handle single-objective problems only")
    if problem.constrained:
        raise ValueError("baselines do not handle constraints")


def _evaluate_all(problem, members):
    return np.array([float(problem.evaluate(x)[0]) for x in members])


def ga_run(problem: ProblemDefinition, params: GaParams, max_iterations: int) -> RunRecord:
    """Real-coded generational GA with elitism of one.

    Each generation creates and evaluates exactly n children; the previous
    elite replaces the worst child when strictly better (cached fitness, no
    extra evaluation), which keeps the budget exact and the best trace
    monotone.
    """
    if max_iterations < 1:
        raise ValueError("max_iterations must be >= 1")
    _check_problem(problem)
    rng = np.random.default_rng(params.seed)
    lower, upper = problem.bounds.lower, problem.bounds.upper
    span = problem.bounds.span
    n, d = params.n, problem.d

    members = rng.uniform(lower, upper, size=(n, d))
    fitness = _evaluate_all(problem, members)
    trace = np.empty(max_iterations)

    for t in range(max_iterations):
        elite_idx = int(np.argmin(fitness))
        elite_x = members[elite_idx].copy()
        elite_f = fitness[elite_idx]

        # binary tournaments for both parents of every child
        a = rng.integers(n, size=n)
        b = rng.integers(n, size=n)
        p1 = np.where(fitness[a] <= fitness[b], a, b)
        a = rng.integers(n, size=n)
        b = rng.integers(n, size=n)
        p2 = np.where(fitness[a] <= fitness[b], a, b)

        cross = rng.random(n) < params.p_crossover
        alpha = rng.random((n, 1))
        children = np.where(
            cross[:, None],
            alpha * members[p1] + (1.0 - alpha) * members[p2],
            members[p1],
        )

        mutate = rng.random((n, d)) < params.p_mutation
        noise = rng.standard_normal((n, d)) * (GA_MUTATION_SCALE * span)
        children = np.where(mutate, children + noise, children)
        np.clip(children, lower, upper, out=children)

        child_fitness = _evaluate_all(problem, children)
        if child_fitness.min() > elite_f:
            worst = int(np.argmax(child_fitness))
            children[worst] = elite_x
            child_fitness[worst] = elite_f
        members, fitness = children, child_fitness
        trace[t] = fitness.min()

    best = int(np.argmin(fitness))
    return RunRecord(
        best_per_iteration=trace,
        evaluations_used=n * (1 + max_iterations),
        final_best=(members[best].copy(), float(fitness[best])),
        seed=params.seed,
    )


def pso_run(problem: ProblemDefinition, params: PsoParams, max_iterations: int) -> RunRecord:
    """Global-best PSO with inertia weight.

    v <- theta*v + beta1*r1*(pbest - x) + beta2*r2*(gbest - x), with fresh
    uniform vectors r1, r2 per particle per iteration; velocities start at
    zero and are clamped to +/- half the variable range, positions to the
    bounds.
    """
    if max_iterations < 1:
        raise ValueError("max_iterations must be >= 1")
    _check_problem(problem)
    rng = np.random.default_rng(params.seed)
    lower, upper = problem.bounds.lower, problem.bounds.upper
    v_max = problem.bounds.span / 2.0
    n, d = params.n, problem.d

    x = rng.uniform(lower, upper, size=(n, d))
    v = np.zeros((n, d))
    fitness = _evaluate_all(problem, x)
    pbest = x.copy()
    pbest_f = fitness.copy()
    g_idx = int(np.argmin(pbest_f))
    gbest = pbest[g_idx].copy()
    gbest_f = pbest_f[g_idx]
    trace = np.empty(max_iterations)

    for t in range(max_iterations):
        r1 = rng.random((n, d))
        r2 = rng.random((n, d))
        v = params.theta * v + params.beta1 * r1 * (pbest - x) + params.beta2 * r2 * (gbest - x)
        np.clip(v, -v_max, v_max, out=v)
        x = x + v
        np.clip(x, lower, upper, out=x)
        fitness = _evaluate_all(problem, x)
        improved = fitness < pbest_f
        pbest[improved] = x[improved]
        pbest_f[improved] = fitness[improved]
        g_idx = int(np.argmin(pbest_f))
        if pbest_f[g_idx] < gbest_f:
            gbest = pbest[g_idx].copy()
            gbest_f = pbest_f[g_idx]
        trace[t] = gbest_f

    return RunRecord(
        best_per_iteration=trace,
        evaluations_used=n * (1 + max_iterations),
        final_best=(gbest.copy(), float(gbest_f)),
        seed=params.seed,
    )
