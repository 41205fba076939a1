"""Benchmark problems: single-objective test functions, the ZDT/LZ bi-objective
suite, and two constrained engineering design problems (welded beam, disc brake).

Every problem is exposed as a :class:`ProblemDefinition` through
:func:`get_problem`, keyed by name. Evaluators are pure functions of the
decision vector; constrained problems additionally produce a
:class:`ConstraintReport` whose total violation is zero exactly when the point
is feasible under a per-constraint scaled tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

# Inequality constraints are declared feasible when g <= FEASIBILITY_RTOL *
# max(1, scale); the constraints of the design problems span five orders of
# magnitude, so a purely absolute tolerance would misclassify boundary points.
FEASIBILITY_RTOL = 1e-9


@dataclass(frozen=True)
class Bounds:
    """Box bounds of the decision space."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if lower.shape != upper.shape:
            raise ValueError("lower and upper bounds differ in length")
        if not np.all(lower < upper):
            raise ValueError("every lower bound must be strictly below its upper bound")

    @property
    def span(self) -> np.ndarray:
        return self.upper - self.lower


@dataclass
class ConstraintReport:
    """Constraint values at a point.

    inequality_values hold g_k(x), feasible iff <= 0; equality_values hold
    h_j(x). total_violation sums max(0, g_k) and |h_j|, with contributions
    inside the scaled feasibility tolerance clamped to zero, so
    total_violation == 0 exactly when the point is feasible.
    """

    inequality_values: np.ndarray
    equality_values: np.ndarray
    total_violation: float

    @property
    def feasible(self) -> bool:
        return self.total_violation == 0.0


def _build_report(g_values, scales, h_values=()) -> ConstraintReport:
    g = np.asarray(g_values, dtype=float)
    h = np.asarray(h_values, dtype=float)
    tol = FEASIBILITY_RTOL * np.maximum(1.0, np.abs(np.asarray(scales, dtype=float)))
    violation = float(np.sum(np.where(g > tol, g, 0.0)))
    if h.size:
        violation += float(np.sum(np.abs(h)))
    return ConstraintReport(inequality_values=g, equality_values=h, total_violation=violation)


@dataclass
class ProblemDefinition:
    """Uniform wrapper around one benchmark problem."""

    name: str
    d: int
    m: int
    bounds: Bounds
    evaluate: Callable[[np.ndarray], np.ndarray]
    constraints: Optional[Callable[[np.ndarray], ConstraintReport]] = None
    discrete_mask: np.ndarray = None
    true_front: Optional[Callable[[int], np.ndarray]] = None
    known_optimum: Optional[tuple] = None

    def __post_init__(self):
        if self.discrete_mask is None:
            self.discrete_mask = np.zeros(self.d, dtype=bool)
        else:
            self.discrete_mask = np.asarray(self.discrete_mask, dtype=bool)
        if len(self.discrete_mask) != self.d:
            raise ValueError("discrete_mask length must equal the dimension")

    @property
    def constrained(self) -> bool:
        return self.constraints is not None


def _check_dim(x: np.ndarray, d: int, name: str) -> None:
    if len(x) != d:
        raise ValueError(f"{name} expects dimension {d}, got {len(x)}")


# ---------------------------------------------------------------------------
# Single-objective test functions
# ---------------------------------------------------------------------------

def ackley(x: np.ndarray) -> float:
    """Ackley function; global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    d = len(x)
    return float(
        -20.0 * math.exp(-0.2 * math.sqrt(np.sum(x * x) / d))
        - math.exp(np.sum(np.cos(2.0 * math.pi * x)) / d)
        + 20.0
        + math.e
    )


def sphere(x: np.ndarray) -> float:
    """Sum of squares; global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    return float(np.sum(x * x))


def easom(x: np.ndarray) -> float:
    """Easom's function, generalized to d dimensions with a (-1)^(d+1) sign.

    Global minimum -1 at (pi, ..., pi); the basin shrinks rapidly with d.
    """
    x = np.asarray(x, dtype=float)
    d = len(x)
    sign = -1.0 if d % 2 == 0 else 1.0
    return float(sign * np.prod(np.cos(x)) * math.exp(-np.sum((x - math.pi) ** 2)))


def griewank(x: np.ndarray) -> float:
    """Griewank's function; highly multimodal, global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    i = np.arange(1, len(x) + 1, dtype=float)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def rastrigin(x: np.ndarray) -> float:
    """Rastrigin's function; highly multimodal, global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    return float(10.0 * len(x) + np.sum(x * x - 10.0 * np.cos(2.0 * math.pi * x)))


def rosenbrock(x: np.ndarray) -> float:
    """Rosenbrock's banana valley; global minimum 0 at (1, ..., 1)."""
    x = np.asarray(x, dtype=float)
    return float(np.sum((x[:-1] - 1.0) ** 2 + 100.0 * (x[1:] - x[:-1] ** 2) ** 2))


def zakharov(x: np.ndarray) -> float:
    """Zakharov's function; global minimum 0 at the origin."""
    x = np.asarray(x, dtype=float)
    i = np.arange(1, len(x) + 1, dtype=float)
    s = 0.5 * np.sum(i * x)
    return float(np.sum(x * x) + s**2 + s**4)


# ---------------------------------------------------------------------------
# Bi-objective test functions (ZDT suite and the LZ problem)
# ---------------------------------------------------------------------------

ZDT_DIM = 30


def zdt(variant: int, x: np.ndarray) -> np.ndarray:
    """ZDT1/ZDT2/ZDT3 evaluator.

    f1 = x1 and g = 1 + 9 * sum(x_2..x_d) / (d - 1); the second objective is
    g*(1 - sqrt(f1/g)) for ZDT1 (convex front), g*(1 - (f1/g)^2) for ZDT2
    (non-convex front), and g*(1 - sqrt(f1/g) - (f1/g)*sin(10*pi*f1)) for
    ZDT3 (discontinuous front).
    """
    x = np.asarray(x, dtype=float)
    d = len(x)
    f1 = float(x[0])
    g = 1.0 + 9.0 * float(np.sum(x[1:])) / (d - 1)
    ratio = f1 / g
    if variant == 1:
        f2 = g * (1.0 - math.sqrt(ratio))
    elif variant == 2:
        f2 = g * (1.0 - ratio**2)
    elif variant == 3:
        f2 = g * (1.0 - math.sqrt(ratio) - ratio * math.sin(10.0 * math.pi * f1))
    else:
        raise ValueError(f"unknown ZDT variant {variant}")
    return np.array([f1, f2])


def lz(x: np.ndarray) -> np.ndarray:
    """Bi-objective problem of Li and Zhang (2009) with a sinusoidal Pareto set.

    J1/J2 are the odd/even indices j in 2..d (1-based); each objective adds a
    squared deviation of x_j from sin(6*pi*x1 + j*pi/d). On the Pareto set
    the penalties vanish and the front is f2 = 1 - sqrt(f1).
    """
    x = np.asarray(x, dtype=float)
    d = len(x)
    if d < 3:
        raise ValueError(f"lz requires dimension >= 3, got {d}")
    x1 = float(x[0])
    j = np.arange(2, d + 1, dtype=float)
    diffs = (x[1:] - np.sin(6.0 * math.pi * x1 + j * math.pi / d)) ** 2
    odd = (j % 2) == 1
    f1 = x1 + 2.0 * float(np.sum(diffs[odd])) / int(odd.sum())
    f2 = 1.0 - math.sqrt(x1) + 2.0 * float(np.sum(diffs[~odd])) / int((~odd).sum())
    return np.array([f1, f2])


def lz_pareto_point(x1: float, d: int = ZDT_DIM) -> np.ndarray:
    """Decision vector on the LZ Pareto set for a given x1."""
    j = np.arange(2, d + 1, dtype=float)
    return np.concatenate([[x1], np.sin(6.0 * math.pi * x1 + j * math.pi / d)])


# ---------------------------------------------------------------------------
# Engineering design problems
# ---------------------------------------------------------------------------

def welded_beam_quantities(x: np.ndarray) -> dict:
    """Auxiliary quantities of the welded beam model (stresses, load, ...)."""
    w, length, depth, h = (float(v) for v in x)
    sigma = 504000.0 / (h * depth**2)
    q = 6000.0 * (14.0 + length / 2.0)
    dd = 0.5 * math.sqrt(length**2 + (w + depth) ** 2)
    j = math.sqrt(2.0) * w * length * (length**2 / 6.0 + (w + depth) ** 2 / 2.0)
    delta = 65856.0 / (30000.0 * h * depth**3)
    beta = q * dd / j
    alpha = 6000.0 / (math.sqrt(2.0) * w * length)
    tau = math.sqrt(alpha**2 + alpha * beta * length / dd + beta**2)
    p = 0.61423e6 * depth * h**3 / 6.0 * (1.0 - depth * math.sqrt(30.0 / 48.0) / 28.0)
    return {
        "sigma": sigma,
        "Q": q,
        "D": dd,
        "J": j,
        "delta": delta,
        "beta": beta,
        "alpha": alpha,
        "tau": tau,
        "P": p,
    }


def welded_beam(x: np.ndarray) -> np.ndarray:
    """Welded beam objectives: fabrication cost and end deflection.

    Decision vector (w, L, d, h): weld width and length, beam depth and
    thickness, all in inches.
    """
    w, length, depth, h = (float(v) for v in x)
    f1 = 1.10471 * w**2 * length + 0.04811 * depth * h * (14.0 + length)
    f2 = 65856.0 / (30000.0 * h * depth**3)
    return np.array([f1, f2])


_BEAM_SCALES = (1.0, 0.25, 13600.0, 30000.0, 5.0, 0.125, 6000.0)


def welded_beam_constraints(x: np.ndarray) -> ConstraintReport:
    """Seven inequality constraints of the welded beam design."""
    w, length, depth, h = (float(v) for v in x)
    q = welded_beam_quantities(x)
    g = (
        w - h,
        q["delta"] - 0.25,
        q["tau"] - 13600.0,
        q["sigma"] - 30000.0,
        0.10471 * w**2 + 0.04811 * h * depth * (14.0 + length) - 5.0,
        0.125 - w,
        6000.0 - q["P"],
    )
    return _build_report(g, _BEAM_SCALES)


def disc_brake(x: np.ndarray) -> np.ndarray:
    """Disc brake objectives: overall mass and braking time.

    Decision vector (r, R, F, s): inner/outer disc radius (mm), engaging
    force (N), and the number of friction surfaces (integer-valued).
    """
    r, rr, force, s = (float(v) for v in x)
    area = rr**2 - r**2
    f1 = 4.9e-5 * area * (s - 1.0)
    f2 = 9.82e6 * area / (force * s * (rr**3 - r**3))
    return np.array([f1, f2])


_BRAKE_SCALES = (20.0, 30.0, 0.4, 1.0, 900.0)


def disc_brake_constraints(x: np.ndarray) -> ConstraintReport:
    """Five inequality constraints of the disc brake design."""
    r, rr, force, s = (float(v) for v in x)
    area = rr**2 - r**2
    cubes = rr**3 - r**3
    g = (
        20.0 - (rr - r),
        2.5 * (s + 1.0) - 30.0,
        force / (3.14 * area) - 0.4,
        2.22e-3 * force * cubes / area**2 - 1.0,
        900.0 - 0.0266 * force * s * cubes / area,
    )
    return _build_report(g, _BRAKE_SCALES)


# ---------------------------------------------------------------------------
# Analytic true fronts
# ---------------------------------------------------------------------------

_ZDT3_GRID = 200001


def _sqrt_front(n: int) -> np.ndarray:
    f1 = np.linspace(0.0, 1.0, n)
    return np.stack([f1, 1.0 - np.sqrt(f1)], axis=1)


def _zdt2_front(n: int) -> np.ndarray:
    f1 = np.linspace(0.0, 1.0, n)
    return np.stack([f1, 1.0 - f1**2], axis=1)


def _zdt3_front(n: int) -> np.ndarray:
    # Dense sampling of the g = 1 curve, filtered to its non-dominated subset;
    # the front is five disconnected arcs ending near f1 = 0.852.
    x1 = np.linspace(0.0, 1.0, _ZDT3_GRID)
    f2 = 1.0 - np.sqrt(x1) - x1 * np.sin(10.0 * math.pi * x1)
    running_min = np.minimum.accumulate(f2)
    keep = np.ones(len(x1), dtype=bool)
    keep[1:] = f2[1:] < running_min[:-1]
    candidates = np.stack([x1[keep], f2[keep]], axis=1)
    idx = np.linspace(0, len(candidates) - 1, n).round().astype(int)
    return candidates[idx]


def true_front(problem: ProblemDefinition, n: int) -> np.ndarray:
    """Sample n points from a problem's analytic true front.

    Raises:
        ValueError: if the problem has no analytic front.
    """
    if problem.true_front is None:
        raise ValueError(f"problem {problem.name!r} has no analytic true front")
    if n < 1:
        raise ValueError("point count must be >= 1")
    return problem.true_front(n)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_SINGLE_OBJECTIVE = {
    "ackley": (ackley, 32.768, 10),
    "sphere": (sphere, 5.12, 10),
    "easom": (easom, 100.0, 2),
    "griewank": (griewank, 600.0, 10),
    "rastrigin": (rastrigin, 5.12, 10),
    "rosenbrock": (rosenbrock, 5.0, 10),
    "zakharov": (zakharov, None, 10),
}


def _single_objective_problem(name: str, d: int) -> ProblemDefinition:
    fn, half_range, _ = _SINGLE_OBJECTIVE[name]
    if name == "zakharov":
        bounds = Bounds(np.full(d, -5.0), np.full(d, 10.0))
    else:
        bounds = Bounds(np.full(d, -half_range), np.full(d, half_range))
    if name == "easom":
        x_star = np.full(d, math.pi)
        f_star = np.array([-1.0])
    elif name == "rosenbrock":
        x_star = np.ones(d)
        f_star = np.array([0.0])
    else:
        x_star = np.zeros(d)
        f_star = np.array([0.0])

    def evaluate(x, _fn=fn, _d=d, _name=name):
        _check_dim(x, _d, _name)
        return np.array([_fn(x)])

    return ProblemDefinition(
        name=name, d=d, m=1, bounds=bounds, evaluate=evaluate,
        known_optimum=(x_star, f_star),
    )


def _zdt_problem(variant: int) -> ProblemDefinition:
    name = f"zdt{variant}"
    front = {1: _sqrt_front, 2: _zdt2_front, 3: _zdt3_front}[variant]

    def evaluate(x, _v=variant, _name=name):
        _check_dim(x, ZDT_DIM, _name)
        return zdt(_v, x)

    return ProblemDefinition(
        name=name, d=ZDT_DIM, m=2,
        bounds=Bounds(np.zeros(ZDT_DIM), np.ones(ZDT_DIM)),
        evaluate=evaluate, true_front=front,
    )


def _lz_problem(d: int) -> ProblemDefinition:
    def evaluate(x, _d=d):
        _check_dim(x, _d, "lz")
        return lz(x)

    lower = np.concatenate([[0.0], np.full(d - 1, -1.0)])
    upper = np.ones(d)
    return ProblemDefinition(
        name="lz", d=d, m=2, bounds=Bounds(lower, upper),
        evaluate=evaluate, true_front=_sqrt_front,
    )


def _welded_beam_problem() -> ProblemDefinition:
    def evaluate(x):
        _check_dim(x, 4, "welded-beam")
        return welded_beam(x)

    def constraints(x):
        _check_dim(x, 4, "welded-beam")
        return welded_beam_constraints(x)

    return ProblemDefinition(
        name="welded-beam", d=4, m=2,
        bounds=Bounds([0.125, 0.1, 0.1, 0.125], [2.0, 10.0, 10.0, 2.0]),
        evaluate=evaluate, constraints=constraints,
    )


def _disc_brake_problem() -> ProblemDefinition:
    def evaluate(x):
        _check_dim(x, 4, "disc-brake")
        return disc_brake(x)

    def constraints(x):
        _check_dim(x, 4, "disc-brake")
        return disc_brake_constraints(x)

    return ProblemDefinition(
        name="disc-brake", d=4, m=2,
        bounds=Bounds([55.0, 75.0, 1000.0, 2.0], [80.0, 110.0, 3000.0, 20.0]),
        evaluate=evaluate, constraints=constraints,
        discrete_mask=np.array([False, False, False, True]),
    )


def problem_names() -> list[str]:
    """All registry names, in CLI listing order."""
    return list(_SINGLE_OBJECTIVE) + ["zdt1", "zdt2", "zdt3", "lz", "welded-beam", "disc-brake"]


def get_problem(name: str, d: Optional[int] = None) -> ProblemDefinition:
    """Look up a problem by name.

    d overrides the default dimension where the problem is scalable (the
    seven single-objective functions and lz). ZDT problems are fixed at
    d = 30 and the design problems at d = 4.

    Raises:
        KeyError: unknown problem name.
        ValueError: dimension override not supported for this problem.
    """
    if name in _SINGLE_OBJECTIVE:
        default_d = _SINGLE_OBJECTIVE[name][2]
        return _single_objective_problem(name, d if d is not None else default_d)
    if name in ("zdt1", "zdt2", "zdt3"):
        if d is not None and d != ZDT_DIM:
            raise ValueError(f"{name} is defined at dimension {ZDT_DIM}")
        return _zdt_problem(int(name[-1]))
    if name == "lz":
        return _lz_problem(d if d is not None else ZDT_DIM)
    if name == "welded-beam":
        if d is not None and d != 4:
            raise ValueError("welded-beam is defined at dimension 4")
        return _welded_beam_problem()
    if name == "disc-brake":
        if d is not None and d != 4:
            raise ValueError("disc-brake is defined at dimension 4")
        return _disc_brake_problem()
    raise KeyError(f"unknown problem {name!r}")
