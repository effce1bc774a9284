"""Small-scale Monte Carlo coverage study.

Replicates the simulation protocol (n = 3000 observations per sample) at
desk scale and prints one summary row per parameter: mean estimate,
absolute bias, mean squared error, average confidence interval, and the
coverage probability of the nominal 95% intervals.  Increase REPS to 1000
for full-scale tables.
"""

from stabletail import ExperimentConfig, StableParams, run_experiment, summarize

REPS = 200

header = f"{'target':<7}{'mean':>9}{'bias':>9}{'mse':>9}{'avg CI':>22}{'len':>8}{'cov':>7}{'valid':>7}"

for alpha, sigma in [(1.1, 1.0), (1.2, 0.5), (1.5, 0.5)]:
    cfg = ExperimentConfig(params=StableParams(alpha, sigma),
                           reps=REPS, master_seed=42)
    results = run_experiment(cfg, workers=4)
    print(f"\nalpha = {alpha}, sigma = {sigma}, {REPS} replications")
    print(header)
    for target in cfg.targets:
        r = summarize(results, cfg.params, target)
        ci = f"({r.avg_ci[0]:.3f}, {r.avg_ci[1]:.3f})"
        print(f"{r.target:<7}{r.mean_estimate:>9.3f}{r.abs_bias:>9.3f}"
              f"{r.mse:>9.3f}{ci:>22}{r.length:>8.3f}{r.cov_prob:>7.2f}"
              f"{r.valid_reps:>7}")
