"""Command-line interface.

Subcommands: ``run`` (one experiment), ``reproduce`` (pre-canned benchmark
tables and design studies), ``sweep`` (parameter sweep), ``plot-data``
(plot-ready files from run outputs), and ``list`` (registry names).

Exit codes: 0 success, 2 unknown problem/optimizer/table name, 3 output I/O
failure, 4 missing inputs.

Options for ``run`` and ``sweep`` may also come from an INI-style config file
(``--config``): ``key = value`` lines under a ``[run]`` or ``[sweep]``
section, keys named like the long flags (``lambda``, ``from`` included).
Explicit flags override config values; config values override defaults.
"""

from __future__ import annotations

import configparser
import functools
import sys
from pathlib import Path

import click

from floraopt import harness
from floraopt.problems import get_problem

_EXIT_CODES = (
    (harness.UnknownNameError, 2),
    (harness.OutputIOError, 3),
    (harness.MissingInputsError, 4),
)


def _handled(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except tuple(exc for exc, _ in _EXIT_CODES) as exc:
            for exc_type, code in _EXIT_CODES:
                if isinstance(exc, exc_type):
                    click.echo(f"error: {exc}", err=True)
                    sys.exit(code)
            raise

    return wrapper


def _load_config(path, section):
    if path is None:
        return {}
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise harness.MissingInputsError(f"config file {path} not found")
    if not parser.has_section(section):
        return {}
    return dict(parser.items(section))


def _pick(cli_value, config, key, default, convert=str):
    if cli_value is not None:
        return cli_value
    if key in config:
        return convert(config[key])
    return default


@click.group()
@click.version_option(package_name="floraopt")
def main():
    """Flower pollination optimizer benchmark harness."""


@main.command("list")
def list_command():
    """List available problems and optimizers."""
    listing = harness.registry_listing()
    click.echo("problems:")
    for name in listing["problems"]:
        click.echo(f"  {name}")
    click.echo("optimizers:")
    for name in listing["optimizers"]:
        click.echo(f"  {name}")


@main.command()
@click.option("--problem", default=None, help="Problem name (see: floraopt list).")
@click.option("--optimizer", default=None, help="Optimizer name: fpa, ga, or pso.")
@click.option("--iters", type=int, default=None, help="Iterations per run.")
@click.option("--pop", type=int, default=None, help="Population size.")
@click.option("--p", type=float, default=None, help="Switch probability (fpa).")
@click.option("--gamma", type=float, default=None, help="Step scaling factor (fpa).")
@click.option("--lambda", "levy_exponent", type=float, default=None,
              help="Levy exponent (fpa).")
@click.option("--repeats", type=int, default=None, help="Seeded repeats.")
@click.option("--seed", type=int, default=None, help="Base seed; run r uses seed+r.")
@click.option("--out", default=None, help="Output directory.")
@click.option("--config", "config_path", default=None,
              help="INI config file; flags override its [run] section.")
@_handled
def run(problem, optimizer, iters, pop, p, gamma, levy_exponent, repeats, seed, out,
        config_path):
    """Run one seeded experiment and write CSVs and figures."""
    cfg = _load_config(config_path, "run")
    problem = _pick(problem, cfg, "problem", "sphere")
    optimizer = _pick(optimizer, cfg, "optimizer", "fpa")
    iters = _pick(iters, cfg, "iters", 1000, int)
    pop = _pick(pop, cfg, "pop", None, int)
    p = _pick(p, cfg, "p", None, float)
    gamma = _pick(gamma, cfg, "gamma", None, float)
    levy_exponent = _pick(levy_exponent, cfg, "lambda", None, float)
    repeats = _pick(repeats, cfg, "repeats", 1, int)
    seed = _pick(seed, cfg, "seed", 1, int)
    out = Path(_pick(out, cfg, "out", f"runs/{problem}_{optimizer}"))

    try:
        problem_def = get_problem(problem)
    except KeyError as exc:
        raise harness.UnknownNameError(f"unknown problem {problem!r}") from exc
    params = harness.default_params(
        optimizer,
        multiobjective=problem_def.m > 1,
        n=pop,
        p=p,
        gamma=gamma,
        levy_exponent=levy_exponent,
    )
    spec = harness.ExperimentSpec(
        problem=problem,
        optimizer=optimizer,
        params=params,
        iterations=iters,
        repeats=repeats,
        seed_base=seed,
        out_dir=out,
    )
    rows = harness.run_experiment(spec)
    finals = [row.final for row in rows]
    click.echo(f"{problem}/{optimizer}: {repeats} run(s), "
               f"best final {min(finals):.6g}, outputs in {out}")


@main.command()
@click.option("--table", required=True,
              type=click.Choice(harness.REPRODUCE_TABLES),
              help="Reproduction target.")
@click.option("--out", default=None, help="Output directory.")
@_handled
def reproduce(table, out):
    """Reproduce a benchmark table or design study at desk scale."""
    out = Path(out) if out else Path(f"reproduce-{table}")
    report = harness.reproduce(table, out)
    click.echo(f"report written to {report}")
    for line in report.read_text().splitlines()[1:]:
        fields = line.split(",")
        if len(fields) >= 6 and fields[5]:
            click.echo(f"  {fields[0]}: measured {fields[3]} vs threshold "
                       f"{fields[4]} -> {fields[5]}")


@main.command()
@click.option("--param", default=None, help="Parameter to sweep: p, gamma, lambda, pop.")
@click.option("--from", "start", type=float, default=None, help="First value.")
@click.option("--to", "stop", type=float, default=None, help="Last value (inclusive).")
@click.option("--step", type=float, default=None, help="Increment.")
@click.option("--problem", default=None)
@click.option("--optimizer", default=None)
@click.option("--iters", type=int, default=None)
@click.option("--repeats", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--out", default=None)
@click.option("--config", "config_path", default=None,
              help="INI config file; flags override its [sweep] section.")
@_handled
def sweep(param, start, stop, step, problem, optimizer, iters, repeats, seed, out,
          config_path):
    """Sweep one parameter over a range of values."""
    cfg = _load_config(config_path, "sweep")
    param = _pick(param, cfg, "param", "p")
    start = _pick(start, cfg, "from", 0.05, float)
    stop = _pick(stop, cfg, "to", 0.95, float)
    step = _pick(step, cfg, "step", 0.05, float)
    problem = _pick(problem, cfg, "problem", "sphere")
    optimizer = _pick(optimizer, cfg, "optimizer", "fpa")
    iters = _pick(iters, cfg, "iters", 200, int)
    repeats = _pick(repeats, cfg, "repeats", 3, int)
    seed = _pick(seed, cfg, "seed", 1, int)
    out = _pick(out, cfg, "out", f"sweep-{param}")
    path = harness.sweep(
        param, start, stop, step,
        problem=problem, optimizer=optimizer, iterations=iters,
        repeats=repeats, seed_base=seed, out_dir=out,
    )
    click.echo(f"sweep written to {path}")


@main.command("plot-data")
@click.option("--run-dir", required=True, help="Directory holding run outputs.")
@click.option("--out", default=None, help="Destination (default: RUN_DIR/plotdata).")
@_handled
def plot_data(run_dir, out):
    """Emit plot-ready two-column files from existing run outputs."""
    written = harness.emit_plot_data(run_dir, out)
    click.echo(f"wrote {len(written)} plot-data files")


if __name__ == "__main__":
    main()
