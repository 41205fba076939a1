"""Flower pollination optimizer, multiobjective extension, and benchmark harness."""

from floraopt.baselines import GaParams, PsoParams, ga_run, pso_run
from floraopt.fpa import FpaParams, Population, RunRecord, run
from floraopt.levy import LevyConfig, gamma_fn, levy_step, mantegna_sigma
from floraopt.metrics import (
    FrontSample,
    front_error,
    generalized_distance,
    point_to_front_distance,
)
from floraopt.mofpa import (
    ArchiveEntry,
    MofpaParams,
    ParetoArchive,
    dominates,
    feasibility_compare,
    random_weights,
    run_mo,
    scalarize,
    solve_discrete,
)
from floraopt.problems import (
    Bounds,
    ConstraintReport,
    ProblemDefinition,
    get_problem,
    problem_names,
    true_front,
)

__all__ = [
    "ArchiveEntry",
    "Bounds",
    "ConstraintReport",
    "FpaParams",
    "FrontSample",
    "GaParams",
    "LevyConfig",
    "MofpaParams",
    "ParetoArchive",
    "Population",
    "ProblemDefinition",
    "PsoParams",
    "RunRecord",
    "dominates",
    "feasibility_compare",
    "front_error",
    "ga_run",
    "gamma_fn",
    "generalized_distance",
    "get_problem",
    "levy_step",
    "mantegna_sigma",
    "point_to_front_distance",
    "problem_names",
    "pso_run",
    "random_weights",
    "run",
    "run_mo",
    "scalarize",
    "solve_discrete",
    "true_front",
]

__version__ = "0.1.0"
