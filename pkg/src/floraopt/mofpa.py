"""Multiobjective extension of the flower pollination optimizer.

Objectives are collapsed to one scalar through a random-weight sum; with many
weight combinations the non-dominated points encountered along the way trace
out the Pareto front. Two schedules are provided:

* ``resample-per-iteration`` (default): one population evolves for the whole
  run; a fresh weight vector is drawn at the start of every iteration and
  drives all replacement decisions of that sweep, and every feasible
  evaluated point is offered to an external bounded archive.
* ``fixed-per-run``: K independent single-weight runs whose final bests are
  dominance-filtered into the archive (one front point per weight vector).

Constraints are handled by feasibility rules (feasible beats infeasible,
lower violation beats higher, then lower scalar objective), and only feasible
points are archived. A single integer-valued decision variable is supported
through exhaustive enumeration of its values with continuous sub-solves; with
one bounded integer variable this degenerate branch-and-bound is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from floraopt.fpa import FpaParams, _draw_partners
from floraopt.levy import LevyConfig, levy_step
from floraopt.metrics import FrontIndex
from floraopt.problems import Bounds, ProblemDefinition

WEIGHT_MODES = ("resample-per-iteration", "fixed-per-run")

# Reference-front sample size used for the per-iteration distance trace.
TRUTH_SAMPLE_SIZE = 10_000

_WEIGHT_FLOOR = 1e-12


def random_weights(m: int, rng: np.random.Generator) -> np.ndarray:
    """Positive weights summing to one, from normalized uniform draws.

    Components below 1e-12 are redrawn so every weight stays strictly
    positive.
    """
    if m < 2:
        raise ValueError("weight vectors need at least two objectives")
    u = np.asarray(rng.random(m), dtype=float)
    small = u < _WEIGHT_FLOOR
    while np.any(small):
        u[small] = rng.random(int(small.sum()))
        small = u < _WEIGHT_FLOOR
    return u / u.sum()


def scalarize(f: np.ndarray, w: np.ndarray) -> float:
    """Weighted sum of objectives."""
    f = np.asarray(f, dtype=float)
    w = np.asarray(w, dtype=float)
    if f.shape != w.shape:
        raise ValueError(f"length mismatch: objectives {f.shape} vs weights {w.shape}")
    return float(np.dot(w, f))


def dominates(a: np.ndarray, b: np.ndarray) -> bool:
    """Pareto dominance for minimization: a no worse everywhere, better somewhere."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return bool(np.all(a <= b) and np.any(a < b))


def feasibility_compare(fitness_a, violation_a, fitness_b, violation_b) -> int:
    """Order two (scalar fitness, violation) pairs by feasibility rules.

    Returns -1 if the first wins, +1 if the second wins, 0 on a tie.
    """
    if violation_a == 0.0 and violation_b > 0.0:
        return -1
    if violation_b == 0.0 and violation_a > 0.0:
        return 1
    if violation_a > 0.0:  # both infeasible
        if violation_a < violation_b:
            return -1
        if violation_b < violation_a:
            return 1
        return 0
    if fitness_a < fitness_b:
        return -1
    if fitness_b < fitness_a:
        return 1
    return 0


@dataclass
class ArchiveEntry:
    solution: np.ndarray
    objectives: np.ndarray
    violation: float = 0.0


class ParetoArchive:
    """Bounded store of mutually non-dominated feasible points.

    When full, the entry with the smallest nearest-neighbor distance in
    min-max-normalized objective space is evicted; the entries holding the
    minimum of each single objective are never evicted. Not safe for
    concurrent mutation.
    """

    def __init__(self, capacity: int):
        if capacity < 2:
            raise ValueError("archive capacity must be >= 2")
        self.capacity = capacity
        self._solutions: list[np.ndarray] = []
        self._objectives = np.empty((0, 0))

    def __len__(self) -> int:
        return self._objectives.shape[0]

    @property
    def objectives(self) -> np.ndarray:
        return self._objectives.copy()

    @property
    def solutions(self) -> np.ndarray:
        return np.array(self._solutions) if self._solutions else np.empty((0, 0))

    def entries(self) -> list[ArchiveEntry]:
        return [
            ArchiveEntry(solution=s.copy(), objectives=f.copy())
            for s, f in zip(self._solutions, self._objectives)
        ]

    def insert(self, solution: np.ndarray, objectives: np.ndarray, violation: float = 0.0) -> bool:
        """Offer a feasible point; returns True when it enters the archive.

        A candidate dominated by (or exactly equal in objectives to) an
        archived entry is rejected; otherwise entries it dominates are
        dropped and it is added, with crowding-based eviction when the
        capacity is exceeded.
        """
        if violation != 0.0:
            raise ValueError("only feasible points (violation 0) may be archived")
        f = np.asarray(objectives, dtype=float).copy()
        x = np.asarray(solution, dtype=float).copy()
        if len(self) == 0:
            self._objectives = f[None, :]
            self._solutions = [x]
            return True
        a = self._objectives
        le = a <= f
        lt = a < f
        if np.any(np.all(le, axis=1) & np.any(lt, axis=1)):
            return False
        if np.any(np.all(a == f, axis=1)):
            return False
        ge = f <= a
        gt = f < a
        doomed = np.all(ge, axis=1) & np.any(gt, axis=1)
        if np.any(doomed):
            keep = ~doomed
            self._objectives = a[keep]
            self._solutions = [s for s, k in zip(self._solutions, keep) if k]
        self._objectives = np.vstack([self._objectives, f[None, :]])
        self._solutions.append(x)
        while len(self) > self.capacity:
            self._evict_most_crowded()
        return True

    def _evict_most_crowded(self):
        obj = self._objectives
        lo = obj.min(axis=0)
        span = obj.max(axis=0) - lo
        span[span == 0.0] = 1.0
        z = (obj - lo) / span
        diff = z[:, None, :] - z[None, :, :]
        dist = np.sqrt(np.sum(diff * diff, axis=2))
        np.fill_diagonal(dist, np.inf)
        nn = dist.min(axis=1)
        for j in range(obj.shape[1]):
            nn[int(np.argmin(obj[:, j]))] = np.inf  # protect extreme points
        victim = int(np.argmin(nn))
        keep = np.ones(len(self), dtype=bool)
        keep[victim] = False
        self._objectives = self._objectives[keep]
        del self._solutions[victim]


@dataclass
class MofpaParams(FpaParams):
    """Multiobjective engine settings; n=50 and 1000 iterations by default.

    fixed_weights (one weight vector per sub-run) applies to the
    fixed-per-run mode only and suppresses the random weight draw.
    """

    n: int = 50
    archive_capacity: int = 100
    weight_mode: str = "resample-per-iteration"
    points_requested: int = 100
    fixed_weights: Optional[Sequence] = None

    def __post_init__(self):
        super().__post_init__()
        if self.weight_mode not in WEIGHT_MODES:
            raise ValueError(f"unknown weight mode {self.weight_mode!r}")
        if self.archive_capacity < 2:
            raise ValueError("archive capacity must be >= 2")
        if self.points_requested < 1:
            raise ValueError("points_requested must be >= 1")
        if (
            self.weight_mode == "resample-per-iteration"
            and self.archive_capacity < self.points_requested
        ):
            raise ValueError("archive capacity must cover the requested point count")


@dataclass
class MoRunRecord:
    """Per-run bookkeeping; the trace holds the archive's generalized
    distance to the analytic front per iteration when one exists."""

    dg_per_iteration: Optional[np.ndarray]
    evaluations_used: int
    seed: int
    global_moves: int = 0
    local_moves: int = 0


def _evaluate_with_constraints(problem: ProblemDefinition, x: np.ndarray):
    f = problem.evaluate(x)
    if problem.constrained:
        return f, problem.constraints(x).total_violation
    return f, 0.0


def _best_index(scalar: np.ndarray, violations: np.ndarray) -> int:
    feasible = violations == 0.0
    if feasible.any():
        idx = np.flatnonzero(feasible)
        return int(idx[np.argmin(scalar[idx])])
    return int(np.argmin(violations))


def _archive_dg(archive: ParetoArchive, index: FrontIndex) -> float:
    if len(archive) == 0:
        return float("nan")
    d = index.distances(archive.objectives)
    return float(np.sqrt(np.sum(d * d)) / len(d))


def run_mo(
    problem: ProblemDefinition,
    params: MofpaParams,
    levy: Optional[LevyConfig] = None,
) -> tuple[ParetoArchive, MoRunRecord]:
    """Multiobjective run; returns the archive and its convergence record.

    Problems with integer-valued variables must go through
    :func:`solve_discrete` instead.
    """
    if problem.m < 2:
        raise ValueError("run_mo needs at least two objectives")
    if problem.discrete_mask.any():
        raise ValueError("problems with discrete variables go through solve_discrete")
    if levy is None:
        levy = LevyConfig(exponent=params.levy_exponent)
    if params.weight_mode == "fixed-per-run":
        return _run_fixed_per_run(problem, params, levy)
    return _run_resampled(problem, params, levy)


def _run_resampled(problem, params, levy):
    rng = np.random.default_rng(params.seed)
    archive = ParetoArchive(params.archive_capacity)
    truth_index = None
    if problem.true_front is not None:
        truth_index = FrontIndex(problem.true_front(TRUTH_SAMPLE_SIZE))

    lower, upper = problem.bounds.lower, problem.bounds.upper
    n, d = params.n, problem.d
    members = rng.uniform(lower, upper, size=(n, d))
    objectives = np.empty((n, problem.m))
    violations = np.empty(n)
    for i in range(n):
        objectives[i], violations[i] = _evaluate_with_constraints(problem, members[i])
        if violations[i] == 0.0:
            archive.insert(members[i], objectives[i])
    evaluations = n
    counter = {"global": 0, "local": 0}
    trace = np.empty(params.max_iterations) if truth_index is not None else None

    for t in range(params.max_iterations):
        w = random_weights(problem.m, rng)
        scalar = objectives @ w
        g_best = members[_best_index(scalar, violations)].copy()
        for i in range(n):
            if rng.random() < params.p:
                step = levy_step(levy, d, rng)
                candidate = members[i] + params.gamma * step * (g_best - members[i])
                counter["global"] += 1
            else:
                j, k = _draw_partners(n, rng)
                candidate = members[i] + rng.random() * (members[j] - members[k])
                counter["local"] += 1
            np.clip(candidate, lower, upper, out=candidate)
            f_cand, v_cand = _evaluate_with_constraints(problem, candidate)
            evaluations += 1
            if v_cand == 0.0:
                archive.insert(candidate, f_cand)
            s_cand = float(f_cand @ w)
            if feasibility_compare(s_cand, v_cand, scalar[i], violations[i]) < 0:
                members[i] = candidate
                objectives[i] = f_cand
                violations[i] = v_cand
                scalar[i] = s_cand
        if trace is not None:
            trace[t] = _archive_dg(archive, truth_index)

    record = MoRunRecord(
        dg_per_iteration=trace,
        evaluations_used=evaluations,
        seed=params.seed,
        global_moves=counter["global"],
        local_moves=counter["local"],
    )
    return archive, record


def _run_fixed_per_run(problem, params, levy):
    if params.fixed_weights is not None and len(params.fixed_weights) != params.points_requested:
        raise ValueError("fixed_weights must supply one weight vector per requested point")
    archive = ParetoArchive(params.archive_capacity)
    lower, upper = problem.bounds.lower, problem.bounds.upper
    n, d = params.n, problem.d
    evaluations = 0
    counter = {"global": 0, "local": 0}

    for k in range(params.points_requested):
        rng = np.random.default_rng(params.seed + k)
        if params.fixed_weights is not None:
            w = np.asarray(params.fixed_weights[k], dtype=float)
        else:
            w = random_weights(problem.m, rng)
        members = rng.uniform(lower, upper, size=(n, d))
        objectives = np.empty((n, problem.m))
        violations = np.empty(n)
        for i in range(n):
            objectives[i], violations[i] = _evaluate_with_constraints(problem, members[i])
        evaluations += n
        scalar = objectives @ w
        for _ in range(params.max_iterations):
            g_best = members[_best_index(scalar, violations)].copy()
            for i in range(n):
                if rng.random() < params.p:
                    step = levy_step(levy, d, rng)
                    candidate = members[i] + params.gamma * step * (g_best - members[i])
                    counter["global"] += 1
                else:
                    j, kk = _draw_partners(n, rng)
                    candidate = members[i] + rng.random() * (members[j] - members[kk])
                    counter["local"] += 1
                np.clip(candidate, lower, upper, out=candidate)
                f_cand, v_cand = _evaluate_with_constraints(problem, candidate)
                evaluations += 1
                s_cand = float(f_cand @ w)
                if feasibility_compare(s_cand, v_cand, scalar[i], violations[i]) < 0:
                    members[i] = candidate
                    objectives[i] = f_cand
                    violations[i] = v_cand
                    scalar[i] = s_cand
        best = _best_index(scalar, violations)
        if violations[best] == 0.0:
            archive.insert(members[best], objectives[best])

    record = MoRunRecord(
        dg_per_iteration=None,
        evaluations_used=evaluations,
        seed=params.seed,
        global_moves=counter["global"],
        local_moves=counter["local"],
    )
    return archive, record


def _fix_variable(problem: ProblemDefinition, idx: int, value: float) -> ProblemDefinition:
    """Continuous sub-problem with one variable pinned to a value."""
    keep = np.ones(problem.d, dtype=bool)
    keep[idx] = False

    def expand(xc):
        return np.insert(np.asarray(xc, dtype=float), idx, value)

    def evaluate(xc):
        return problem.evaluate(expand(xc))

    constraints = None
    if problem.constrained:
        def constraints(xc):
            return problem.constraints(expand(xc))

    return ProblemDefinition(
        name=f"{problem.name}@{value:g}",
        d=problem.d - 1,
        m=problem.m,
        bounds=Bounds(problem.bounds.lower[keep], problem.bounds.upper[keep]),
        evaluate=evaluate,
        constraints=constraints,
    )


def solve_discrete(
    problem: ProblemDefinition,
    params: MofpaParams,
    levy: Optional[LevyConfig] = None,
) -> tuple[ParetoArchive, MoRunRecord]:
    """Enumerate the single integer variable, solving a continuous sub-problem
    per value and merging the resulting archives.

    The iteration budget is divided evenly across the values; sub-run k is
    seeded params.seed + k.
    """
    n_discrete = int(problem.discrete_mask.sum())
    if n_discrete != 1:
        raise ValueError(
            f"solve_discrete supports exactly one discrete variable, found {n_discrete}"
        )
    idx = int(np.flatnonzero(problem.discrete_mask)[0])
    low = int(np.ceil(problem.bounds.lower[idx]))
    high = int(np.floor(problem.bounds.upper[idx]))
    values = list(range(low, high + 1))
    sub_iterations = max(1, params.max_iterations // len(values))

    merged = ParetoArchive(params.archive_capacity)
    evaluations = 0
    global_moves = local_moves = 0
    for k, value in enumerate(values):
        sub_problem = _fix_variable(problem, idx, float(value))
        sub_params = replace(
            params, max_iterations=sub_iterations, seed=params.seed + k
        )
        archive, record = run_mo(sub_problem, sub_params, levy)
        evaluations += record.evaluations_used
        global_moves += record.global_moves
        local_moves += record.local_moves
        for entry in archive.entries():
            full = np.insert(entry.solution, idx, float(value))
            merged.insert(full, entry.objectives)

    record = MoRunRecord(
        dg_per_iteration=None,
        evaluations_used=evaluations,
        seed=params.seed,
        global_moves=global_moves,
        local_moves=local_moves,
    )
    return merged, record
