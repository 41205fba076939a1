import math

import numpy as np
import pytest

from floraopt.metrics import (
    FrontSample,
    front_error,
    generalized_distance,
    point_to_front_distance,
)
from floraopt.problems import get_problem, true_front


def brute_force_nearest(q, points):
    """Independent O(N) oracle for the nearest-neighbor distance."""
    best = math.inf
    for p in points:
        d = math.sqrt(sum((a - b) ** 2 for a, b in zip(q, p)))
        best = min(best, d)
    return best


@pytest.fixture(scope="module")
def zdt1_truth():
    return FrontSample(true_front(get_problem("zdt1"), 10_000), source="analytic")


class TestPointToFrontDistance:
    def test_point_on_sample_is_zero(self, zdt1_truth):
        q = zdt1_truth.points[1234]
        assert point_to_front_distance(q, zdt1_truth) == 0.0

    def test_off_front_point_matches_bruteforce(self, zdt1_truth):
        q = np.array([0.25, 0.6])
        d = point_to_front_distance(q, zdt1_truth)
        oracle = brute_force_nearest(q, zdt1_truth.points[::7])
        # oracle over a subsample can only be >= the full-sample distance
        assert d <= oracle + 1e-12
        # distance to the dense sample tracks the true curve distance, whose
        # minimum sits near f1 = 0.1987 at about 0.06874
        assert d == pytest.approx(0.0687420, abs=2e-4)

    def test_single_point_front(self):
        front = FrontSample(np.array([[3.0, 4.0]]))
        assert point_to_front_distance([0.0, 0.0], front) == pytest.approx(5.0)

    def test_dimension_mismatch(self, zdt1_truth):
        with pytest.raises(ValueError):
            point_to_front_distance([0.1, 0.2, 0.3], zdt1_truth)


class TestFrontError:
    def test_subset_gives_zero(self, zdt1_truth):
        est = FrontSample(zdt1_truth.points[::97])
        assert front_error(est, zdt1_truth) == 0.0

    def test_two_points_at_distance_tenth(self):
        truth = FrontSample(np.array([[0.0, 0.0]]), source="analytic")
        est = FrontSample(np.array([[0.1, 0.0], [0.0, 0.1]]))
        assert front_error(est, truth) == pytest.approx(0.02)

    def test_matches_bruteforce_oracle(self, zdt1_truth):
        rng = np.random.default_rng(42)
        est_points = rng.uniform(0.0, 1.2, size=(20, 2))
        expected = sum(
            brute_force_nearest(q, zdt1_truth.points) ** 2 for q in est_points
        )
        assert front_error(FrontSample(est_points), zdt1_truth) == pytest.approx(
            expected, rel=1e-12
        )


class TestGeneralizedDistance:
    def test_identical_fronts(self, zdt1_truth):
        est = FrontSample(zdt1_truth.points)
        assert generalized_distance(est, zdt1_truth) == 0.0

    def test_hand_example(self, zdt1_truth):
        # (0.0, 1.1) sits 0.1 above the endpoint; (1.0, 0.1) is nearer to the
        # curve's interior (0.0893) because the front bends away underneath it
        est = FrontSample(np.array([[0.0, 1.1], [1.0, 0.1]]))
        d1 = brute_force_nearest(est.points[0], zdt1_truth.points)
        d2 = brute_force_nearest(est.points[1], zdt1_truth.points)
        assert d1 == pytest.approx(0.1, abs=1e-3)
        assert d2 == pytest.approx(0.0893, abs=1e-3)
        expected = 0.5 * math.sqrt(d1**2 + d2**2)
        assert generalized_distance(est, zdt1_truth) == pytest.approx(expected, rel=1e-12)

    def test_identity_with_front_error(self, zdt1_truth):
        rng = np.random.default_rng(9)
        for _ in range(10):
            n = int(rng.integers(1, 40))
            est = FrontSample(rng.uniform(0.0, 1.5, size=(n, 2)))
            dg = generalized_distance(est, zdt1_truth)
            assert dg == math.sqrt(front_error(est, zdt1_truth)) / n

    def test_permutation_invariance(self, zdt1_truth):
        rng = np.random.default_rng(17)
        est_points = rng.uniform(0.0, 1.0, size=(15, 2))
        shuffled = est_points[rng.permutation(15)]
        truth_shuffled = FrontSample(
            zdt1_truth.points[rng.permutation(len(zdt1_truth))], source="analytic"
        )
        a = generalized_distance(FrontSample(est_points), zdt1_truth)
        b = generalized_distance(FrontSample(shuffled), truth_shuffled)
        assert a == pytest.approx(b, rel=1e-12)

    def test_adding_on_front_point_decreases_dg(self, zdt1_truth):
        est_points = np.array([[0.3, 0.8], [0.6, 0.5]])
        base = generalized_distance(FrontSample(est_points), zdt1_truth)
        extended = np.vstack([est_points, zdt1_truth.points[500]])
        assert generalized_distance(FrontSample(extended), zdt1_truth) < base


class TestFrontSampleValidation:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            FrontSample(np.empty((0, 2)))

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            FrontSample(np.array([[0.0, np.inf]]))

    def test_rejects_unknown_source(self):
        with pytest.raises(ValueError):
            FrontSample(np.array([[0.0, 0.0]]), source="guess")


@pytest.mark.slow
class TestAgainstOptimizerOutput:
    def test_front_error_after_long_single_weight_runs(self, zdt1_truth):
        # one-point-per-weight runs converge onto the front, so the summed
        # squared distances collapse far below the 1e-4 band
        from floraopt.mofpa import MofpaParams, run_mo
        from floraopt.problems import get_problem

        params = MofpaParams(
            seed=1, n=25, max_iterations=2500, weight_mode="fixed-per-run",
            points_requested=6, archive_capacity=50,
        )
        archive, _ = run_mo(get_problem("zdt1"), params)
        ef = front_error(FrontSample(archive.objectives), zdt1_truth)
        assert ef <= 1e-4

    def test_truth_sample_density_convergence(self):
        # doubling the reference sample moves the metric by well under 1%
        from floraopt.mofpa import MofpaParams, run_mo
        from floraopt.problems import get_problem, true_front

        problem = get_problem("zdt1")
        archive, _ = run_mo(problem, MofpaParams(seed=2, max_iterations=100))
        est = FrontSample(archive.objectives)
        coarse = generalized_distance(est, FrontSample(true_front(problem, 10_000), source="analytic"))
        fine = generalized_distance(est, FrontSample(true_front(problem, 20_000), source="analytic"))
        assert abs(fine - coarse) / coarse < 0.01
