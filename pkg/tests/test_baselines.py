import numpy as np
import pytest

from floraopt.baselines import GaParams, PsoParams, ga_run, pso_run
from floraopt.problems import get_problem


@pytest.fixture
def sphere4():
    return get_problem("sphere", d=4)


class TestParams:
    def test_defaults_match_benchmark_settings(self):
        ga = GaParams()
        assert (ga.n, ga.p_crossover, ga.p_mutation) == (25, 0.95, 0.05)
        pso = PsoParams()
        assert (pso.n, pso.theta, pso.beta1, pso.beta2) == (25, 0.7, 1.5, 1.5)

    def test_validation(self):
        with pytest.raises(ValueError):
            GaParams(p_crossover=1.2)
        with pytest.raises(ValueError):
            PsoParams(theta=1.5)
        with pytest.raises(ValueError):
            PsoParams(beta1=-0.1)

    def test_degenerate_settings_are_allowed(self):
        # theta=0 with zero learning parameters freezes the swarm; the
        # settings must be expressible to test that behavior
        PsoParams(theta=0.0, beta1=0.0, beta2=0.0)
        GaParams(p_crossover=0.0, p_mutation=0.0)


class TestGa:
    def test_budget_exactness(self, sphere4):
        calls = {"n": 0}
        inner = sphere4.evaluate

        def counting(x):
            calls["n"] += 1
            return inner(x)

        sphere4.evaluate = counting
        rec = ga_run(sphere4, GaParams(n=8, seed=3), 11)
        assert rec.evaluations_used == 8 * 12
        assert calls["n"] == rec.evaluations_used

    def test_elitism_trace_non_increasing(self, sphere4):
        for seed in (1, 2, 3):
            rec = ga_run(sphere4, GaParams(seed=seed), 80)
            assert np.all(np.diff(rec.best_per_iteration) <= 0.0)

    def test_degenerate_operators_never_worsen_best(self, sphere4):
        rec = ga_run(sphere4, GaParams(p_crossover=0.0, p_mutation=0.0, seed=9), 50)
        assert np.all(np.diff(rec.best_per_iteration) <= 0.0)
        # selection resampling alone cannot invent new points, so the final
        # best equals the initial best
        assert rec.best_per_iteration[-1] == rec.best_per_iteration[0]

    def test_determinism(self, sphere4):
        a = ga_run(sphere4, GaParams(seed=17), 30)
        b = ga_run(sphere4, GaParams(seed=17), 30)
        assert np.array_equal(a.best_per_iteration, b.best_per_iteration)
        assert np.array_equal(a.final_best[0], b.final_best[0])

    def test_bounds_respected(self):
        problem = get_problem("rosenbrock", d=3)
        rec = ga_run(problem, GaParams(seed=5), 40)
        assert np.all(rec.final_best[0] >= problem.bounds.lower)
        assert np.all(rec.final_best[0] <= problem.bounds.upper)

    def test_rejects_multiobjective(self):
        with pytest.raises(ValueError):
            ga_run(get_problem("zdt1"), GaParams(), 1)


class TestPso:
    def test_budget_exactness(self, sphere4):
        calls = {"n": 0}
        inner = sphere4.evaluate

        def counting(x):
            calls["n"] += 1
            return inner(x)

        sphere4.evaluate = counting
        rec = pso_run(sphere4, PsoParams(n=6, seed=2), 9)
        assert rec.evaluations_used == 6 * 10
        assert calls["n"] == rec.evaluations_used

    def test_gbest_trace_non_increasing(self, sphere4):
        for seed in (1, 2, 3):
            rec = pso_run(sphere4, PsoParams(seed=seed), 80)
            assert np.all(np.diff(rec.best_per_iteration) <= 0.0)

    def test_frozen_dynamics(self, sphere4):
        # zero inertia and zero learning: velocities stay zero, nothing moves
        rec = pso_run(sphere4, PsoParams(theta=0.0, beta1=0.0, beta2=0.0, seed=4), 30)
        assert np.all(rec.best_per_iteration == rec.best_per_iteration[0])

    def test_determinism(self, sphere4):
        a = pso_run(sphere4, PsoParams(seed=23), 30)
        b = pso_run(sphere4, PsoParams(seed=23), 30)
        assert np.array_equal(a.best_per_iteration, b.best_per_iteration)

    def test_bounds_respected(self):
        problem = get_problem("rosenbrock", d=3)
        rec = pso_run(problem, PsoParams(seed=5), 40)
        assert np.all(rec.final_best[0] >= problem.bounds.lower)
        assert np.all(rec.final_best[0] <= problem.bounds.upper)

    def test_rejects_constrained(self):
        with pytest.raises(ValueError):
            pso_run(get_problem("welded-beam"), PsoParams(), 1)


@pytest.mark.slow
class TestStatisticalQuality:
    def test_ga_reaches_milli_precision_on_sphere(self):
        problem = get_problem("sphere", d=10)
        finals = [ga_run(problem, GaParams(seed=s), 1000).final_best[1] for s in range(1, 12)]
        assert np.median(finals) <= 1e-3

    def test_pso_reaches_micro_precision_on_sphere(self):
        problem = get_problem("sphere", d=10)
        finals = [pso_run(problem, PsoParams(seed=s), 1000).final_best[1] for s in range(1, 12)]
        assert np.median(finals) <= 1e-6
