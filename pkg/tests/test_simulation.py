import math

import numpy as np
import pytest
from scipy.stats import cauchy, norm

from stabletail import (
    ConfidenceInterval,
    DomainError,
    ExperimentConfig,
    ReplicationResult,
    StableParams,
    SummaryError,
    density_figure_data,
    hill_plot_data,
    run_experiment,
    run_replication,
    summarize,
)


def small_config(**overrides):
    defaults = dict(params=StableParams(1.5, 1.0), n=400, reps=8, master_seed=7)
    defaults.update(overrides)
    return ExperimentConfig(**defaults)


class TestRunReplication:
    def test_bit_for_bit_determinism(self):
        cfg = small_config()
        assert run_replication(cfg, 3) == run_replication(cfg, 3)

    def test_index_range_checked(self):
        with pytest.raises(DomainError):
            run_replication(small_config(), 99)

    def test_estimate_present_iff_flag_absent(self):
        cfg = small_config(reps=20)
        for i in range(20):
            r = run_replication(cfg, i)
            for target in cfg.targets:
                assert (r.estimate(target) is None) == (target in r.failure_flags)
                assert (r.interval(target) is None) == (target in r.failure_flags)

    def test_large_alpha_overestimation_breaks_scale(self):
        # alpha_hat above 2 invalidates sigma/mu but not alpha itself
        cfg = ExperimentConfig(params=StableParams(1.8, 1.0), n=5000, reps=30,
                               master_seed=1)
        results = [run_replication(cfg, i) for i in range(30)]
        broken = [r for r in results if "sigma" in r.failure_flags]
        assert len(broken) > 5
        for r in broken:
            assert r.alpha_hat is not None and r.alpha_hat >= 2.0
            assert "mu" in r.failure_flags

    def test_one_sided_sample_fails_mu_only(self):
        # extreme location keeps every observation positive
        cfg = ExperimentConfig(params=StableParams(1.5, 1.0, mu=1000.0),
                               n=50, reps=1, master_seed=3)
        r = run_replication(cfg, 0)
        assert "mu" in r.failure_flags
        assert r.alpha_hat is not None


class TestRunExperiment:
    def test_single_rep(self):
        cfg = small_config(reps=1)
        assert run_experiment(cfg) == [run_replication(cfg, 0)]

    def test_worker_count_is_invisible(self):
        cfg = small_config(reps=12)
        serial = run_experiment(cfg, workers=1)
        parallel = run_experiment(cfg, workers=3)
        assert serial == parallel

    def test_indices_cover_range(self):
        cfg = small_config(reps=5)
        assert [r.index for r in run_experiment(cfg)] == list(range(5))


def fake_result(index, est, ci):
    return ReplicationResult(index, 100, alpha_hat=est,
                             ci_alpha=ConfidenceInterval(*ci, 0.95, "alpha"))


class TestSummarize:
    def test_symmetric_deviations(self):
        results = [fake_result(0, 1.0, (0.5, 1.5)), fake_result(1, 1.2, (0.5, 1.5))]
        row = summarize(results, StableParams(1.1), "alpha")
        assert row.abs_bias == pytest.approx(0.0, abs=1e-15)
        assert row.mse == pytest.approx(0.01, abs=1e-15)
        assert row.mean_estimate == pytest.approx(1.1, abs=1e-15)

    def test_coverage_counts_containing_intervals(self):
        results = [fake_result(0, 1.0, (0.9, 1.2)), fake_result(1, 1.25, (1.2, 1.3))]
        row = summarize(results, StableParams(1.1), "alpha")
        assert row.cov_prob == 0.5
        assert row.valid_reps == 2

    def test_average_interval_and_length(self):
        results = [fake_result(0, 1.0, (0.8, 1.2)), fake_result(1, 1.1, (1.0, 1.6))]
        row = summarize(results, StableParams(1.1), "alpha")
        assert row.avg_ci == pytest.approx((0.9, 1.4))
        assert row.length == pytest.approx(row.avg_ci[1] - row.avg_ci[0], abs=1e-15)

    def test_failed_replications_are_excluded(self):
        results = [fake_result(0, 1.0, (0.5, 1.5)),
                   ReplicationResult(1, None, failure_flags={"alpha": "selection"})]
        row = summarize(results, StableParams(1.0), "alpha")
        assert row.valid_reps == 1

    def test_empty_summary(self):
        results = [ReplicationResult(0, None, failure_flags={"alpha": "selection"})]
        with pytest.raises(SummaryError):
            summarize(results, StableParams(1.0), "alpha")

    def test_coverage_times_valid_reps_is_integral(self, mc):
        cfg, results = mc(1.5, 0.5)
        for target in ("alpha", "mu", "sigma"):
            row = summarize(results, cfg.params, target)
            assert row.cov_prob * row.valid_reps == pytest.approx(
                round(row.cov_prob * row.valid_reps), abs=1e-9)

    def test_bias_decreases_with_smaller_alpha(self, mc):
        biases = []
        for alpha in (1.1, 1.5, 1.8):
            cfg, results = mc(alpha, 1.0)
            biases.append(summarize(results, cfg.params, "alpha").abs_bias)
        assert biases[0] < biases[1] < biases[2]


class TestHillPlotData:
    def test_shape_and_reference_column(self):
        table = hill_plot_data(StableParams(1.1), 2000, 400, seed=5)
        assert table.shape == (400, 3)
        np.testing.assert_array_equal(table[:, 0], np.arange(1, 401))
        np.testing.assert_array_equal(table[:, 2], np.full(400, 1.1))

    def test_small_alpha_trajectory_is_accurate(self):
        table = hill_plot_data(StableParams(1.1), 5000, 500, seed=5)
        window = table[149:500, 1]
        inside = np.mean((window >= 1.0) & (window <= 1.25))
        assert inside > 0.5

    def test_n_must_exceed_k_max(self):
        with pytest.raises(DomainError):
            hill_plot_data(StableParams(1.1), 400, 400, seed=0)


class TestDensityFigureData:
    GRID = np.linspace(-3.0, 3.0, 13)

    def test_gaussian_column(self):
        table = density_figure_data([2.0], self.GRID)
        ref = norm(scale=math.sqrt(2.0)).pdf(self.GRID)
        np.testing.assert_allclose(table[:, 2], ref, atol=1e-6)

    def test_cauchy_column(self):
        table = density_figure_data([1.0], self.GRID)
        np.testing.assert_allclose(table[:, 2], cauchy().pdf(self.GRID), atol=1e-6)

    def test_columns_symmetric(self):
        table = density_figure_data([0.7, 1.5], self.GRID)
        for alpha in (0.7, 1.5):
            col = table[table[:, 1] == alpha]
            np.testing.assert_allclose(col[:, 2], col[::-1, 2], atol=1e-10)

    def test_alpha_range_checked(self):
        with pytest.raises(DomainError):
            density_figure_data([0.2], self.GRID)
