"""Command-line front end: experiment dispatch and bit-stable CSV output.

Exit status: 0 success, 1 domain/estimation error, 2 usage error.
Diagnostics go to stderr; only CSV data is written to the output.
"""

from __future__ import annotations

import argparse
import sys

from .confidence import ci_alpha, ci_location, ci_scale
from .errors import DomainError, EstimationError
from .estimators import (
    SortedSample,
    delta_factor,
    peng_location,
    scale_estimate,
    tau_factor,
)
from .selection import default_k_bounds, hill_trajectory, select_k_star
from .simulation import (
    ExperimentConfig,
    density_figure_data,
    hill_plot_data,
    run_experiment,
    summarize,
)
from .stable import StableParams

__all__ = ["main"]


def _typed(parse, check, message):
    def converter(text):
        try:
            value = parse(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid value {text!r}")
        if not check(value):
            raise argparse.ArgumentTypeError(f"{message}, got {text}")
        return value
    return converter


_alpha_arg = _typed(float, lambda v: 0.0 < v <= 2.0, "alpha must lie in (0, 2]")
_positive_real = _typed(float, lambda v: v > 0.0, "must be positive")
_level_arg = _typed(float, lambda v: 0.0 < v < 1.0, "level must lie in (0, 1)")
_theta_arg = _typed(float, lambda v: 0.0 <= v <= 0.5, "theta must lie in [0, 0.5]")
_positive_int = _typed(int, lambda v: v >= 1, "must be a positive integer")
_seed_arg = _typed(int, lambda v: 0 <= v < 2 ** 64, "seed must be a 64-bit integer")


def _alpha_list(text):
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid alpha list {text!r}")
    if not values or not all(0.3 < v <= 2.0 for v in values):
        raise argparse.ArgumentTypeError("alphas must lie in (0.3, 2]")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabletail",
        description="EVT-based estimation and confidence intervals for "
                    "symmetric Levy-stable distributions.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--out", default=None, help="output CSV path (default: stdout)")
        p.add_argument("--precision", type=_positive_int, default=6,
                       help="significant digits in the CSV output")

    sim = sub.add_parser("simulate", help="Monte Carlo study of the three estimators")
    sim.add_argument("--alpha", type=_alpha_arg, required=True)
    sim.add_argument("--sigma", type=_positive_real, default=1.0)
    sim.add_argument("--mu", type=float, default=0.0)
    sim.add_argument("--n", type=_positive_int, default=3000)
    sim.add_argument("--reps", type=_positive_int, default=1000)
    sim.add_argument("--level", type=_level_arg, default=0.95)
    sim.add_argument("--theta", type=_theta_arg, default=0.3)
    sim.add_argument("--k-min", type=_positive_int, default=None)
    sim.add_argument("--k-max", type=_positive_int, default=None)
    sim.add_argument("--seed", type=_seed_arg, default=0)
    sim.add_argument("--workers", type=_positive_int, default=1)
    add_common(sim)

    est = sub.add_parser("estimate", help="estimate parameters from a data file")
    est.add_argument("--input", required=True, help="text file, one real per line")
    est.add_argument("--level", type=_level_arg, default=0.95)
    est.add_argument("--theta", type=_theta_arg, default=0.3)
    est.add_argument("--k-min", type=_positive_int, default=None)
    est.add_argument("--k-max", type=_positive_int, default=None)
    add_common(est)

    hp = sub.add_parser("hill-plot", help="Hill trajectory of one sample")
    hp.add_argument("--alpha", type=_alpha_arg, required=True)
    hp.add_argument("--sigma", type=_positive_real, default=1.0)
    hp.add_argument("--mu", type=float, default=0.0)
    hp.add_argument("--n", type=_positive_int, default=5000)
    hp.add_argument("--k-max", type=_positive_int, default=None)
    hp.add_argument("--seed", type=_seed_arg, default=0)
    add_common(hp)

    den = sub.add_parser("density", help="stable density curves on a grid")
    den.add_argument("--alphas", type=_alpha_list, required=True,
                     help="comma-separated stability indices in (0.3, 2]")
    den.add_argument("--x-min", type=float, default=-5.0)
    den.add_argument("--x-max", type=float, default=5.0)
    den.add_argument("--points", type=_positive_int, default=201)
    add_common(den)
    return parser


def _fmt(value, precision: int) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int,)) and not isinstance(value, bool):
        return str(value)
    return format(float(value), f".{precision}g")


def _emit(path, header, rows, precision):
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v, precision) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _read_input(path):
    values = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                value = float(text)
            except ValueError:
                raise DomainError(f"{path}:{lineno}: unparsable value {text!r}")
            if not value == value or value in (float("inf"), float("-inf")):
                raise DomainError(f"{path}:{lineno}: non-finite value {text!r}")
            values.append(value)
    if not values:
        raise DomainError(f"{path}: no data")
    return values


def _cmd_simulate(args) -> int:
    config = ExperimentConfig(
        params=StableParams(alpha=args.alpha, sigma=args.sigma, mu=args.mu),
        n=args.n, reps=args.reps, level=args.level, theta=args.theta,
        k_min=args.k_min, k_max=args.k_max, master_seed=args.seed)
    results = run_experiment(config, workers=args.workers)
    rows = []
    status = 0
    for target in config.targets:
        try:
            row = summarize(results, config.params, target)
        except EstimationError as err:
            print(f"stabletail: {target}: {err}", file=sys.stderr)
            status = 1
            continue
        rows.append((row.target, row.true_value, row.mean_estimate, row.abs_bias,
                     row.mse, row.avg_ci[0], row.avg_ci[1], row.length,
                     row.cov_prob, row.valid_reps))
    _emit(args.out, ["target", "true_value", "mean_estimate", "abs_bias", "mse",
                     "ci_lower", "ci_upper", "length", "cov_prob", "valid_reps"],
          rows, args.precision)
    return status


def _cmd_estimate(args) -> int:
    data = _read_input(args.input)
    xs = SortedSample(data)
    zs = xs.magnitudes()
    n = xs.n
    k_min, k_max = default_k_bounds(n)
    if args.k_min is not None:
        k_min = args.k_min
    if args.k_max is not None:
        k_max = min(args.k_max, n - 1)
    traj = hill_trajectory(zs, k_max)
    sel = select_k_star(traj, args.theta, k_min, k_max)
    k = sel.k_star
    alpha_hat = float(traj[k - 1])
    rows = []
    status = 0

    try:
        ci_a = ci_alpha(alpha_hat, k, args.level)
        rows.append(("alpha", alpha_hat, ci_a.lower, ci_a.upper, k, n))
    except EstimationError as err:
        print(f"stabletail: alpha: {err}", file=sys.stderr)
        status = 1
    try:
        mu_hat = peng_location(xs, k)
        ci_m = ci_location(mu_hat, delta_factor(alpha_hat),
                           tau_factor(xs.order(k), k, n, alpha_hat), n, args.level)
        rows.append(("mu", mu_hat, ci_m.lower, ci_m.upper, k, n))
    except EstimationError as err:
        print(f"stabletail: mu: {err}", file=sys.stderr)
        status = 1
    try:
        sigma_hat = scale_estimate(zs.order(n - k), k, n, alpha_hat)
        ci_s = ci_scale(sigma_hat, alpha_hat, k, n, args.level)
        rows.append(("sigma", sigma_hat, ci_s.lower, ci_s.upper, k, n))
    except EstimationError as err:
        print(f"stabletail: sigma: {err}", file=sys.stderr)
        status = 1

    _emit(args.out, ["target", "estimate", "ci_lower", "ci_upper", "k_star", "n"],
          rows, args.precision)
    return status


def _cmd_hill_plot(args) -> int:
    k_max = args.k_max if args.k_max is not None else args.n // 4
    params = StableParams(alpha=args.alpha, sigma=args.sigma, mu=args.mu)
    table = hill_plot_data(params, args.n, k_max, args.seed)
    rows = [(int(k), ah, ta) for k, ah, ta in table]
    _emit(args.out, ["k", "alpha_hat", "true_alpha"], rows, args.precision)
    return 0


def _cmd_density(args) -> int:
    if args.x_max <= args.x_min:
        print("stabletail: --x-max must exceed --x-min", file=sys.stderr)
        return 2
    import numpy as np
    grid = np.linspace(args.x_min, args.x_max, args.points)
    table = density_figure_data(args.alphas, grid)
    _emit(args.out, ["x", "alpha", "density"],
          [tuple(row) for row in table], args.precision)
    return 0


_COMMANDS = {
    "simulate": _cmd_simulate,
    "estimate": _cmd_estimate,
    "hill-plot": _cmd_hill_plot,
    "density": _cmd_density,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.subcommand](args)
    except EstimationError as err:
        print(f"stabletail: error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"stabletail: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
