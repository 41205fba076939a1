"""Seeded benchmark harness: experiment matrices, CSV emission, reproduction
targets, and parameter sweeps.

Every run is seeded seed_base + repeat index, so identical specs produce
byte-identical CSVs apart from the wall_time_ms column of the results file.
Floats are written with 17 significant digits (exact round trip); files use
comma separators, a header row, and LF line endings.

Outputs per experiment, under the chosen directory:

* ``{problem}_{optimizer}_results.csv``  one row per repeat
* ``{problem}_{optimizer}_summary.csv``  mean/median/min/max/std of finals
* ``{problem}_{optimizer}_seed{N}_convergence.csv``  per-iteration trace
* ``{problem}_{optimizer}_seed{N}_front.csv``  archive front (multiobjective)
* ``{problem}_true_front.csv``  analytic front sample (when one exists)
* PNG figures alongside (convergence panels, fronts); CSVs stay authoritative

For multiobjective runs the reported ``final`` is the generalized distance to
the analytic front when one exists, otherwise the archive's minimum first
objective (cost/mass for the design problems).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import numpy as np

from floraopt.baselines import GaParams, PsoParams, ga_run, pso_run
from floraopt.fpa import FpaParams, run
from floraopt.metrics import FrontIndex
from floraopt.mofpa import MofpaParams, run_mo, solve_discrete
from floraopt.problems import get_problem, problem_names

OPTIMIZER_NAMES = ("fpa", "ga", "pso")

TRUTH_CSV_POINTS = 10_000


class UnknownNameError(Exception):
    """Problem or optimizer name failed to resolve (CLI exit code 2)."""


class OutputIOError(Exception):
    """Output directory or file could not be written (CLI exit code 3)."""


class MissingInputsError(Exception):
    """Expected run outputs were not found (CLI exit code 4)."""


# ---------------------------------------------------------------------------
# Published reference constants (literature values for this benchmark family)
# ---------------------------------------------------------------------------

# Mean best values at matched budget, per optimizer.
TABLE2_REFERENCE = {
    "ackley": {"ga": 8.29e-9, "pso": 7.12e-12, "fpa": 5.09e-12},
    "sphere": {"ga": 6.61e-15, "pso": 1.18e-24, "fpa": 2.47e-26},
    "easom": {"ga": -0.9989, "pso": -0.9998, "fpa": -1.0000},
    "griewank": {"ga": 5.72e-9, "pso": 4.69e-9, "fpa": 1.37e-11},
    "rastrigin": {"ga": 2.93e-6, "pso": 3.44e-6, "fpa": 4.52e-7},
    "rosenbrock": {"ga": 8.97e-6, "pso": 8.21e-8, "fpa": 6.19e-8},
    "zakharov": {"ga": 8.77e-4, "pso": 1.58e-4, "fpa": 9.53e-5},
}

# Front errors at 1000 and 2500 iterations.
TABLE3_REFERENCE = {
    "zdt1": (1.1e-6, 3.1e-19),
    "zdt2": (2.7e-6, 4.4e-10),
    "zdt3": (1.4e-5, 7.2e-12),
    "lz": (1.2e-6, 2.9e-12),
}

# Generalized distance at n=50, 500 iterations, per method.
TABLE4_REFERENCE = {
    "vega": {"zdt1": 3.79e-2, "zdt2": 2.37e-3, "zdt3": 3.29e-1, "lz": 1.47e-3},
    "nsga-ii": {"zdt1": 3.33e-2, "zdt2": 7.24e-2, "zdt3": 1.14e-1, "lz": 2.77e-2},
    "mode": {"zdt1": 5.80e-3, "zdt2": 5.50e-3, "zdt3": 2.15e-2, "lz": 3.19e-3},
    "demo": {"zdt1": 1.08e-3, "zdt2": 7.55e-4, "zdt3": 1.18e-3, "lz": 1.40e-3},
    "bees": {"zdt1": 2.40e-2, "zdt2": 1.69e-2, "zdt3": 1.91e-1, "lz": 1.88e-2},
    "spea": {"zdt1": 1.78e-3, "zdt2": 1.34e-3, "zdt3": 4.75e-2, "lz": 1.92e-3},
    "mofpa": {"zdt1": 7.11e-5, "zdt2": 1.24e-5, "zdt3": 5.49e-4, "lz": 7.92e-5},
}

# Desk-scale pass thresholds for the reproduce reports. The generalized
# distance thresholds are orders of magnitude looser than the published
# values by design: the published runs are not exactly reproducible, so the
# report checks that this build lands in a sane band rather than on the
# published digit.
T4_DG_THRESHOLDS = {"zdt1": 5e-2, "zdt2": 5e-2, "zdt3": 1e-1, "lz": 1e-1}
T3_EF_THRESHOLDS = {
    "zdt1": (1e-3, 1e-4),
    "zdt2": (1e-3, 1e-4),
    "zdt3": (1e-2, 1e-3),
    "lz": (1e-3, 1e-4),
}


@dataclass
class ExperimentSpec:
    """One experiment: an optimizer on a problem, repeated over seeds."""

    problem: str
    optimizer: str
    params: object
    iterations: int
    repeats: int = 1
    seed_base: int = 1
    out_dir: Path = Path(".")
    dimension: Optional[int] = None

    def __post_init__(self):
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        self.out_dir = Path(self.out_dir)


@dataclass
class ResultRow:
    problem: str
    optimizer: str
    seed: int
    final: float
    evaluations: int
    wall_time_ms: float


def default_params(optimizer: str, multiobjective: bool = False, **overrides):
    """Parameter object with benchmark defaults for the named optimizer."""
    if optimizer == "fpa":
        if multiobjective:
            allowed = {k: v for k, v in overrides.items() if v is not None}
            return MofpaParams(**allowed)
        allowed = {
            k: v
            for k, v in overrides.items()
            if v is not None and k in ("n", "p", "gamma", "levy_exponent", "seed")
        }
        return FpaParams(**allowed)
    if optimizer == "ga":
        allowed = {k: v for k, v in overrides.items() if v is not None and k in ("n", "seed")}
        return GaParams(**allowed)
    if optimizer == "pso":
        allowed = {k: v for k, v in overrides.items() if v is not None and k in ("n", "seed")}
        return PsoParams(**allowed)
    raise UnknownNameError(f"unknown optimizer {optimizer!r}")


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def write_csv(path: Path, header: list[str], rows, footnotes: list[str] = ()) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
            for note in footnotes:
                fh.write(f"# {note}\n")
    except OSError as exc:
        raise OutputIOError(f"cannot write {path}: {exc}") from exc
    return path


def _resolve(spec: ExperimentSpec):
    try:
        problem = get_problem(spec.problem, d=spec.dimension)
    except KeyError as exc:
        raise UnknownNameError(f"unknown problem {spec.problem!r}") from exc
    if spec.optimizer not in OPTIMIZER_NAMES:
        raise UnknownNameError(f"unknown optimizer {spec.optimizer!r}")
    if problem.m > 1 and spec.optimizer != "fpa":
        raise UnknownNameError(
            f"optimizer {spec.optimizer!r} handles single-objective problems only; "
            f"use fpa for {spec.problem!r}"
        )
    return problem


def _single_objective_run(problem, spec: ExperimentSpec, seed: int):
    if spec.optimizer == "fpa":
        params = replace(spec.params, seed=seed, max_iterations=spec.iterations)
        return run(problem, params)
    if spec.optimizer == "ga":
        return ga_run(problem, replace(spec.params, seed=seed), spec.iterations)
    return pso_run(problem, replace(spec.params, seed=seed), spec.iterations)


def run_experiment(spec: ExperimentSpec) -> list[ResultRow]:
    """Execute a seeded experiment and write its CSV and figure outputs."""
    problem = _resolve(spec)
    out = spec.out_dir
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputIOError(f"cannot create output directory {out}: {exc}") from exc

    stem = f"{spec.problem}_{spec.optimizer}"
    rows: list[ResultRow] = []
    traces = {}
    multiobjective = problem.m > 1

    truth_points = None
    truth_index = None
    if multiobjective and problem.true_front is not None:
        truth_points = problem.true_front(TRUTH_CSV_POINTS)
        truth_index = FrontIndex(truth_points)
        write_csv(
            out / f"{spec.problem}_true_front.csv",
            [f"f{i + 1}" for i in range(problem.m)],
            truth_points,
        )

    for r in range(spec.repeats):
        seed = spec.seed_base + r
        started = time.perf_counter()
        if multiobjective:
            params = replace(spec.params, seed=seed, max_iterations=spec.iterations)
            if problem.discrete_mask.any():
                archive, record = solve_discrete(problem, params)
            else:
                archive, record = run_mo(problem, params)
            wall_ms = (time.perf_counter() - started) * 1000.0
            objectives = archive.objectives
            if truth_index is not None:
                d = truth_index.distances(objectives)
                final = float(np.sqrt(np.sum(d * d)) / len(d))
            else:
                final = float(objectives[:, 0].min())
            write_csv(
                out / f"{stem}_seed{seed}_front.csv",
                [f"f{i + 1}" for i in range(problem.m)],
                objectives,
            )
            if record.dg_per_iteration is not None:
                trace = record.dg_per_iteration
                write_csv(
                    out / f"{stem}_seed{seed}_convergence.csv",
                    ["iteration", "dg"],
                    zip(range(1, len(trace) + 1), trace),
                )
                traces[seed] = trace
            _render_front_figure(
                out / f"{stem}_seed{seed}_front.png", objectives, truth_points,
                f"{spec.problem} / {spec.optimizer} seed {seed}",
            )
            evaluations = record.evaluations_used
        else:
            record = _single_objective_run(problem, spec, seed)
            wall_ms = (time.perf_counter() - started) * 1000.0
            final = record.final_best[1]
            trace = record.best_per_iteration
            write_csv(
                out / f"{stem}_seed{seed}_convergence.csv",
                ["iteration", "best"],
                zip(range(1, len(trace) + 1), trace),
            )
            traces[seed] = trace
            evaluations = record.evaluations_used
        rows.append(
            ResultRow(
                problem=spec.problem,
                optimizer=spec.optimizer,
                seed=seed,
                final=final,
                evaluations=evaluations,
                wall_time_ms=wall_ms,
            )
        )

    write_csv(
        out / f"{stem}_results.csv",
        ["problem", "optimizer", "seed", "final", "evaluations", "wall_time_ms"],
        (
            (row.problem, row.optimizer, row.seed, row.final, row.evaluations, row.wall_time_ms)
            for row in rows
        ),
    )
    finals = np.array([row.final for row in rows])
    write_csv(
        out / f"{stem}_summary.csv",
        ["problem", "optimizer", "repeats", "mean", "median", "min", "max", "std"],
        [
            (
                spec.problem,
                spec.optimizer,
                spec.repeats,
                finals.mean(),
                float(np.median(finals)),
                finals.min(),
                finals.max(),
                finals.std(),
            )
        ],
    )
    if traces:
        _render_convergence_figure(
            out / f"{stem}_convergence.png",
            {f"seed {s}": t for s, t in traces.items()},
            f"{spec.problem} / {spec.optimizer}",
            "dg" if multiobjective else "best",
        )
    return rows


def _render_convergence_figure(path, traces, title, ylabel):
    from floraopt import figures

    try:
        figures.render_convergence(traces, path, title, ylabel)
    except OSError as exc:
        raise OutputIOError(f"cannot write {path}: {exc}") from exc


def _render_front_figure(path, front, truth, title):
    from floraopt import figures

    try:
        figures.render_front(front, path, truth, title)
    except OSError as exc:
        raise OutputIOError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Plot-data emission
# ---------------------------------------------------------------------------

def emit_plot_data(run_dir, out_dir=None) -> list[Path]:
    """Rewrite run outputs as plot-ready two-column files.

    Convergence traces become (iteration, value) and (iteration, log10 value)
    files, the latter excluding non-positive values with a trailing footnote
    count; front files are passed through with their headers.
    """
    run_dir = Path(run_dir)
    out_dir = Path(out_dir) if out_dir is not None else run_dir / "plotdata"
    convergence = sorted(run_dir.glob("*_convergence.csv"))
    fronts = sorted(run_dir.glob("*_front.csv"))
    if not convergence and not fronts:
        raise MissingInputsError(f"no run outputs found under {run_dir}")

    written = []
    for path in convergence:
        header, rows = _read_csv(path)
        values = np.array([[float(a), float(b)] for a, b in rows])
        written.append(
            write_csv(out_dir / f"{path.stem}_linear.csv", header, values)
        )
        positive = values[:, 1] > 0.0
        excluded = int((~positive).sum())
        log_rows = np.column_stack(
            [values[positive, 0], np.log10(values[positive, 1])]
        )
        written.append(
            write_csv(
                out_dir / f"{path.stem}_log10.csv",
                [header[0], f"log10_{header[1]}"],
                log_rows,
                footnotes=[f"excluded {excluded} non-positive values"],
            )
        )
    for path in fronts:
        header, rows = _read_csv(path)
        written.append(
            write_csv(out_dir / path.name, header, rows)
        )
    return written


def _read_csv(path):
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise MissingInputsError(f"cannot read {path}: {exc}") from exc
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:] if line and not line.startswith("#")]
    return header, rows


# ---------------------------------------------------------------------------
# Reproduction targets
# ---------------------------------------------------------------------------

REPRODUCE_TABLES = ("t2", "t3", "t4", "design-beam", "design-brake")

_T2_PROBLEMS = ("ackley", "sphere", "easom", "griewank", "rastrigin", "rosenbrock", "zakharov")


def reproduce(table: str, out_dir, iterations=None, repeats=None) -> Path:
    """Run a pre-canned desk-scale reproduction and emit a side-by-side
    report of published reference values against this build's measurements.

    iterations/repeats override the desk-scale defaults (used by quick smoke
    runs; the CLI always runs the defaults).
    """
    if table not in REPRODUCE_TABLES:
        raise UnknownNameError(f"unknown reproduce table {table!r}")
    out_dir = Path(out_dir)
    builder = {
        "t2": _reproduce_t2,
        "t3": _reproduce_t3,
        "t4": _reproduce_t4,
        "design-beam": _reproduce_design_beam,
        "design-brake": _reproduce_design_brake,
    }[table]
    report_rows = builder(out_dir, iterations, repeats)
    return write_csv(
        out_dir / "report.csv",
        ["case", "metric", "reference", "measured", "threshold", "pass", "note"],
        report_rows,
    )


def _pass(value, threshold) -> str:
    return "yes" if value <= threshold else "no"


def _reproduce_t2(out_dir, iterations, repeats):
    iterations = iterations or 1000
    repeats = repeats or 11
    medians = {}
    report = []
    for name in _T2_PROBLEMS:
        for optimizer in OPTIMIZER_NAMES:
            spec = ExperimentSpec(
                problem=name,
                optimizer=optimizer,
                params=default_params(optimizer),
                iterations=iterations,
                repeats=repeats,
                seed_base=1,
                out_dir=out_dir,
            )
            rows = run_experiment(spec)
            med = float(np.median([r.final for r in rows]))
            medians[(name, optimizer)] = med
            report.append(
                (
                    f"{name}/{optimizer}",
                    "median final best",
                    TABLE2_REFERENCE[name][optimizer],
                    med,
                    "",
                    "",
                    "published value is a mean at an unstated dimension",
                )
            )

    report.append(
        (
            "sphere/fpa",
            "median final best",
            TABLE2_REFERENCE["sphere"]["fpa"],
            medians[("sphere", "fpa")],
            1e-6,
            _pass(medians[("sphere", "fpa")], 1e-6),
            "",
        )
    )
    report.append(
        (
            "easom/fpa",
            "median final best",
            TABLE2_REFERENCE["easom"]["fpa"],
            medians[("easom", "fpa")],
            -0.99,
            _pass(medians[("easom", "fpa")], -0.99),
            "",
        )
    )

    # the rosenbrock tolerance is defined at the longer 2500-iteration budget
    rb_spec = ExperimentSpec(
        problem="rosenbrock",
        optimizer="fpa",
        params=default_params("fpa"),
        iterations=iterations * 5 // 2,
        repeats=repeats,
        seed_base=1,
        out_dir=out_dir / "rosenbrock_long",
    )
    rb_rows = run_experiment(rb_spec)
    rb_med = float(np.median([r.final for r in rb_rows]))
    report.append(
        (
            "rosenbrock/fpa",
            f"median final best at {rb_spec.iterations} iterations",
            TABLE2_REFERENCE["rosenbrock"]["fpa"],
            rb_med,
            1e-2,
            _pass(rb_med, 1e-2),
            "budget extended; at 1000 iterations the valley crossing is incomplete",
        )
    )

    wins_pso = sum(
        medians[(n, "fpa")] <= medians[(n, "pso")] for n in _T2_PROBLEMS
    )
    wins_ga = sum(medians[(n, "fpa")] <= medians[(n, "ga")] for n in _T2_PROBLEMS)
    report.append(
        (
            "ordinal/fpa-vs-pso",
            "functions with fpa median <= pso median",
            "",
            wins_pso,
            4,
            "yes" if wins_pso >= 4 else "no",
            "known shortfall: the pinned pso recipe outconverges fpa on smooth functions",
        )
    )
    report.append(
        (
            "ordinal/fpa-vs-ga",
            "functions with fpa median <= ga median",
            "",
            wins_ga,
            5,
            "yes" if wins_ga >= 5 else "no",
            "",
        )
    )
    return report


def _mo_params(iterations, **overrides):
    defaults = dict(max_iterations=iterations, seed=1)
    defaults.update(overrides)
    return MofpaParams(**defaults)


def _front_error_of(archive, problem):
    truth = FrontIndex(problem.true_front(TRUTH_CSV_POINTS))
    d = truth.distances(archive.objectives)
    return float(np.sum(d * d))


def _reproduce_t3(out_dir, iterations, repeats):
    # one-point-per-weight mode: the published front errors are only
    # reachable when every weight gets its own fully converged run
    report = []
    budgets = (1000, 2500) if iterations is None else (iterations, iterations * 2)
    k_points = repeats or 10
    for name in ("zdt1", "zdt2", "zdt3", "lz"):
        problem = get_problem(name)
        for column, budget in enumerate(budgets):
            params = _mo_params(
                budget,
                n=25,
                weight_mode="fixed-per-run",
                points_requested=k_points,
                archive_capacity=100,
            )
            archive, _ = run_mo(problem, params)
            ef = _front_error_of(archive, problem)
            write_csv(
                out_dir / f"{name}_fpa_iters{budget}_front.csv",
                ["f1", "f2"],
                archive.objectives,
            )
            threshold = T3_EF_THRESHOLDS[name][column]
            report.append(
                (
                    f"{name}/{budget}it",
                    "front error",
                    TABLE3_REFERENCE[name][column],
                    ef,
                    threshold,
                    _pass(ef, threshold),
                    f"fixed-per-run, {k_points} weights, n=25",
                )
            )
    return report


def _reproduce_t4(out_dir, iterations, repeats):
    iterations = iterations or 500
    report = []
    for name in ("zdt1", "zdt2", "zdt3", "lz"):
        spec = ExperimentSpec(
            problem=name,
            optimizer="fpa",
            params=_mo_params(iterations),
            iterations=iterations,
            repeats=repeats or 1,
            seed_base=1,
            out_dir=out_dir,
        )
        rows = run_experiment(spec)
        dg = float(np.median([r.final for r in rows]))
        threshold = T4_DG_THRESHOLDS[name]
        report.append(
            (
                f"{name}/mofpa",
                "generalized distance",
                TABLE4_REFERENCE["mofpa"][name],
                dg,
                threshold,
                _pass(dg, threshold),
                "threshold is deliberately ~3 orders looser than the published value",
            )
        )
        for method in ("vega", "nsga-ii", "mode", "demo", "bees", "spea"):
            report.append(
                (
                    f"{name}/{method}",
                    "generalized distance",
                    TABLE4_REFERENCE[method][name],
                    "",
                    "",
                    "",
                    "published reference, not regenerated",
                )
            )
    return report


def _design_report_rows(name, archive, problem):
    objectives = archive.objectives
    violations = [
        problem.constraints(entry.solution).total_violation for entry in archive.entries()
    ]
    feasible_fraction = float(np.mean([v == 0.0 for v in violations]))
    return objectives, violations, feasible_fraction


def _design_run(problem, out_dir, iterations, solver):
    params = _mo_params(iterations, archive_capacity=50, points_requested=50)
    archive, record = solver(problem, params)
    objectives = archive.objectives
    write_csv(
        out_dir / f"{problem.name}_fpa_seed1_front.csv",
        [f"f{i + 1}" for i in range(problem.m)],
        objectives,
    )
    _render_front_figure(
        out_dir / f"{problem.name}_fpa_seed1_front.png",
        objectives,
        None,
        f"{problem.name} / fpa seed 1",
    )
    return archive


def _reproduce_design_beam(out_dir, iterations, repeats):
    iterations = iterations or 1000
    problem = get_problem("welded-beam")
    archive = _design_run(problem, out_dir, iterations, run_mo)
    objectives, violations, feasible_fraction = _design_report_rows(
        "welded-beam", archive, problem
    )
    write_csv(
        out_dir / "welded-beam_feasibility_audit.csv",
        ["cost", "deflection", "reevaluated_violation"],
        (
            (f[0], f[1], v)
            for f, v in zip(objectives, violations)
        ),
    )
    return [
        ("welded-beam/archive", "non-dominated points", 50, len(archive), "", "", ""),
        (
            "welded-beam/size",
            "archive size >= 30",
            "",
            len(archive),
            30,
            "yes" if len(archive) >= 30 else "no",
            "",
        ),
        (
            "welded-beam/feasible",
            "fraction feasible under re-evaluation",
            1.0,
            feasible_fraction,
            1.0,
            "yes" if feasible_fraction == 1.0 else "no",
            "",
        ),
        (
            "welded-beam/min-cost",
            "minimum fabrication cost",
            "",
            float(objectives[:, 0].min()),
            5.0,
            _pass(float(objectives[:, 0].min()), 5.0),
            "cost cap forced by the fifth constraint",
        ),
    ]


def _reproduce_design_brake(out_dir, iterations, repeats):
    iterations = iterations or 1000
    problem = get_problem("disc-brake")
    archive = _design_run(problem, out_dir, iterations, solve_discrete)
    objectives, violations, feasible_fraction = _design_report_rows(
        "disc-brake", archive, problem
    )
    surfaces = sorted({int(round(entry.solution[3])) for entry in archive.entries()})
    write_csv(
        out_dir / "disc-brake_feasibility_audit.csv",
        ["mass", "braking_time", "surfaces", "reevaluated_violation"],
        (
            (f[0], f[1], int(round(entry.solution[3])), v)
            for f, v, entry in zip(objectives, violations, archive.entries())
        ),
    )
    return [
        (
            "disc-brake/feasible",
            "fraction feasible under re-evaluation",
            1.0,
            feasible_fraction,
            1.0,
            "yes" if feasible_fraction == 1.0 else "no",
            "",
        ),
        (
            "disc-brake/surfaces",
            "distinct friction-surface counts in archive",
            "",
            len(surfaces),
            3,
            "yes" if len(surfaces) >= 3 else "no",
            f"values {surfaces}",
        ),
        (
            "disc-brake/min-mass",
            "minimum mass",
            "",
            float(objectives[:, 0].min()),
            0.2,
            _pass(float(objectives[:, 0].min()), 0.2),
            "attainable near the (55, 75, F, 2) corner",
        ),
    ]


# ---------------------------------------------------------------------------
# Parameter sweep
# ---------------------------------------------------------------------------

_SWEEP_PARAMS = {"p": "p", "gamma": "gamma", "lambda": "levy_exponent", "pop": "n"}


def sweep(
    param: str,
    start: float,
    stop: float,
    step: float,
    problem: str = "sphere",
    optimizer: str = "fpa",
    iterations: int = 200,
    repeats: int = 3,
    seed_base: int = 1,
    out_dir="sweep-out",
) -> Path:
    """Sweep one engine parameter over a range, writing value-vs-best CSV."""
    if param not in _SWEEP_PARAMS:
        raise UnknownNameError(
            f"unknown sweep parameter {param!r}, expected one of {sorted(_SWEEP_PARAMS)}"
        )
    if optimizer != "fpa":
        raise UnknownNameError("sweep supports the fpa optimizer")
    out_dir = Path(out_dir)
    field = _SWEEP_PARAMS[param]
    count = int(round((stop - start) / step)) + 1
    values = [start + i * step for i in range(count) if start + i * step <= stop + 1e-12]

    try:
        problem_def = get_problem(problem)
    except KeyError as exc:
        raise UnknownNameError(f"unknown problem {problem!r}") from exc
    if problem_def.m != 1:
        raise UnknownNameError("sweep supports single-objective problems")

    rows = []
    for value in values:
        set_value = int(value) if field == "n" else value
        finals = []
        for r in range(repeats):
            params = FpaParams(
                **{field: set_value}, seed=seed_base + r, max_iterations=iterations
            )
            finals.append(run(problem_def, params).final_best[1])
        finals = np.array(finals)
        rows.append(
            (value, finals.mean(), float(np.median(finals)), finals.std())
        )

    path = write_csv(
        out_dir / f"sweep_{param}.csv",
        [param, "mean_best", "median_best", "std_best"],
        rows,
    )
    from floraopt import figures

    try:
        figures.render_sweep(
            np.array([r[0] for r in rows]),
            np.array([r[1] for r in rows]),
            param,
            out_dir / f"sweep_{param}.png",
        )
    except OSError as exc:
        raise OutputIOError(f"cannot write sweep figure: {exc}") from exc
    return path


def optimizer_names() -> list[str]:
    return list(OPTIMIZER_NAMES)


def registry_listing() -> dict:
    """Names the CLI exposes, problems and optimizers."""
    return {"problems": problem_names(), "optimizers": optimizer_names()}
