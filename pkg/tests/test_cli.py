from click.testing import CliRunner

from floraopt.cli import main


def invoke(*args):
    return CliRunner().invoke(main, list(args))


class TestList:
    def test_lists_all_registry_names(self):
        result = invoke("list")
        assert result.exit_code == 0
        for name in ("ackley", "zdt3", "lz", "welded-beam", "disc-brake", "fpa", "ga", "pso"):
            assert name in result.output


class TestRun:
    def test_basic_run_writes_outputs(self, tmp_path):
        result = invoke(
            "run", "--problem", "sphere", "--optimizer", "fpa", "--iters", "15",
            "--repeats", "2", "--seed", "4", "--out", str(tmp_path),
        )
        assert result.exit_code == 0
        assert (tmp_path / "sphere_fpa_results.csv").exists()
        assert (tmp_path / "sphere_fpa_seed5_convergence.csv").exists()

    def test_fpa_flags_accepted(self, tmp_path):
        result = invoke(
            "run", "--problem", "sphere", "--iters", "10", "--pop", "6",
            "--p", "0.5", "--gamma", "0.2", "--lambda", "1.2",
            "--out", str(tmp_path),
        )
        assert result.exit_code == 0

    def test_multiobjective_run(self, tmp_path):
        result = invoke(
            "run", "--problem", "zdt1", "--iters", "10", "--pop", "8",
            "--out", str(tmp_path),
        )
        assert result.exit_code == 0
        assert (tmp_path / "zdt1_fpa_seed1_front.csv").exists()

    def test_unknown_problem_exit_2(self, tmp_path):
        result = invoke("run", "--problem", "warp", "--out", str(tmp_path))
        assert result.exit_code == 2

    def test_unknown_optimizer_exit_2(self, tmp_path):
        result = invoke(
            "run", "--problem", "sphere", "--optimizer", "simulated-annealing",
            "--out", str(tmp_path),
        )
        assert result.exit_code == 2

    def test_config_file_with_flag_override(self, tmp_path):
        cfg = tmp_path / "bench.ini"
        cfg.write_text(
            "[run]\n"
            "problem = rastrigin\n"
            "optimizer = pso\n"
            "iters = 12\n"
            "repeats = 3\n"
            f"out = {tmp_path / 'out'}\n"
        )
        result = invoke("run", "--config", str(cfg), "--repeats", "1")
        assert result.exit_code == 0
        convergence = list((tmp_path / "out").glob("rastrigin_pso_seed*_convergence.csv"))
        assert len(convergence) == 1  # flag overrode the config's repeats

    def test_missing_config_exit_4(self, tmp_path):
        result = invoke("run", "--config", str(tmp_path / "nope.ini"))
        assert result.exit_code == 4


class TestSweep:
    def test_sweep_cli(self, tmp_path):
        result = invoke(
            "sweep", "--param", "p", "--from", "0.2", "--to", "0.6", "--step", "0.2",
            "--iters", "8", "--repeats", "1", "--out", str(tmp_path),
        )
        assert result.exit_code == 0
        assert (tmp_path / "sweep_p.csv").exists()

    def test_unknown_param_exit_2(self, tmp_path):
        result = invoke(
            "sweep", "--param", "voltage", "--from", "0", "--to", "1",
            "--step", "0.5", "--out", str(tmp_path),
        )
        assert result.exit_code == 2


class TestPlotData:
    def test_missing_inputs_exit_4(self, tmp_path):
        result = invoke("plot-data", "--run-dir", str(tmp_path))
        assert result.exit_code == 4

    def test_plot_data_after_run(self, tmp_path):
        invoke(
            "run", "--problem", "sphere", "--iters", "10", "--repeats", "1",
            "--out", str(tmp_path),
        )
        result = invoke("plot-data", "--run-dir", str(tmp_path))
        assert result.exit_code == 0
        assert (tmp_path / "plotdata").is_dir()


class TestReproduce:
    def test_bad_table_rejected(self, tmp_path):
        result = invoke("reproduce", "--table", "t7", "--out", str(tmp_path))
        assert result.exit_code == 2
