#
# Copyright (c) 2026, The autocov-factors authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import argparse
import pathlib
import sys
from concurrent.futures import Executor
from typing import (
    Any,
    Callable,
    Optional,
    Sequence,
)

import numpy as np

from autocov_factors.fmt import (
    EXIT_OK,
    exit_codes,
    print_err,
)
from autocov_factors.internal import output_format
from autocov_factors.internal.concurrency import create_thread_pool_executor
from autocov_factors.internal.estimation.autocov import mhat_spectrum
from autocov_factors.internal.estimation.calibration import calibrate_dT
from autocov_factors.internal.estimation.estimators import (
    default_ratio_cap,
    k_hat,
    k_tilde,
)
from autocov_factors.internal.estimation.multistep import k_tilde_multistep
from autocov_factors.internal.logger import (
    get_logger,
    set_level,
)
from autocov_factors.internal.panel_io import (
    read_panel_csv,
    write_panel_csv,
)
from autocov_factors.internal.simulation.generator import generate_panel
from autocov_factors.internal.simulation.limits import theoretical_limits
from autocov_factors.internal.simulation.monte_carlo import (
    METHODS,
    decision_table,
    run_mc,
)
from autocov_factors.internal.simulation.scenarios import (
    SCENARIO_NAMES,
    scenario_preset,
)
from autocov_factors.internal.spectral.core import (
    spectral_law,
    t_at_b_plus_curve,
)
from autocov_factors.internal.spectral.transition import (
    detectability_boundary,
    region_bounds,
    spike_limit,
)
from autocov_factors.internal.validation import (
    ensure_readable_file,
    ensure_writable_destination,
)
from autocov_factors.types import (
    EstimatorConfig,
    FactorParams,
)

ESTIMATE_METHODS = ("khat", "kstar", "ktilde", "multistep")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

logger = get_logger()


def _add_output(parser: argparse.ArgumentParser, kind: str) -> None:
    parser.add_argument(
        "--output",
        type=pathlib.Path,
        default=None,
        help=f"Destination of the {kind} output. Written to stdout if not specified.",
    )


def _add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="Master seed of every random draw (default: 0).")


def _add_calibration(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--reps",
        type=int,
        default=None,
        help="Calibration replications (default: AUTOCOV_FACTORS_CALIBRATION_REPS, 2000).",
    )
    parser.add_argument(
        "--level",
        type=float,
        default=None,
        help="Lower-tail quantile level of the calibration (default: AUTOCOV_FACTORS_CALIBRATION_LEVEL, 0.005).",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autocov-factors",
        description="Number of factors in high-dimensional time series from lag-1 autocovariance spectra",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="Worker threads for replications. Defaults to AUTOCOV_FACTORS_MAX_WORKERS.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="Overrides AUTOCOV_FACTORS_LOGGER_LEVEL.",
    )
    subcommands = parser.add_subparsers(dest="subcommand", required=True)

    estimate = subcommands.add_parser("estimate", help="Estimate the number of factors of a CSV panel.")
    estimate.add_argument("--input", type=pathlib.Path, required=True, help="CSV panel, one time point per row.")
    estimate.add_argument("--transpose", action="store_true", help="The CSV holds one series per row.")
    estimate.add_argument(
        "--demean",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Subtract the time average of every series (default: on).",
    )
    estimate.add_argument("--method", choices=ESTIMATE_METHODS, default="kstar")
    threshold = estimate.add_mutually_exclusive_group()
    threshold.add_argument("--d-t", dest="d_t", type=float, default=None, help="Threshold d_T in (0, 1).")
    threshold.add_argument(
        "--calibrate",
        action="store_true",
        help="Calibrate d_T for the panel size; the default for khat and kstar when --d-t is not given.",
    )
    estimate.add_argument("--cap", type=int, default=None, help="Largest ratio index scanned.")
    estimate.add_argument("--steps", type=int, default=3, help="Steps of the multistep method (default: 3).")
    _add_calibration(estimate)
    _add_seed(estimate)
    _add_output(estimate, "JSON report")

    calibrate = subcommands.add_parser("calibrate", help="Calibrate d_T on pure-noise panels.")
    calibrate.add_argument("--p", type=int, required=True)
    calibrate.add_argument("--t", type=int, required=True)
    _add_calibration(calibrate)
    _add_seed(calibrate)
    _add_output(calibrate, "JSON report")

    transition = subcommands.add_parser("transition", help="Phase transition of one factor.")
    transition.add_argument("--gamma0", type=float, required=True, help="Factor variance.")
    transition.add_argument("--gamma1", type=float, required=True, help="Factor lag-1 autocovariance.")
    transition.add_argument("--sigma2", type=float, default=1.0, help="Noise variance (default: 1).")
    transition.add_argument("--y", type=float, required=True, help="Aspect ratio p / T.")
    _add_output(transition, "JSON report")

    region = subcommands.add_parser("region", help="Boundary curves of the undetectable region as CSV.")
    region.add_argument("--y", type=float, required=True, help="Aspect ratio p / T.")
    region.add_argument("--n-points", type=int, default=100, help="Points per curve (default: 100).")
    region.add_argument("--gamma0-max", type=float, default=0.0, help="End of the dashed curves (default: 3 tau1).")
    _add_output(region, "CSV")

    limits = subcommands.add_parser("limits", help="Noise-law constants, the T(b+) curve or a scenario table.")
    target = limits.add_mutually_exclusive_group(required=True)
    target.add_argument("--y", type=float, help="Aspect ratio p / T; writes a, b and T(b+) as JSON.")
    target.add_argument(
        "--y-grid",
        type=float,
        nargs=3,
        metavar=("START", "STOP", "N"),
        help="Writes T(b+), a and b on N evenly spaced ratios as CSV.",
    )
    target.add_argument("--scenario", choices=SCENARIO_NAMES, help="Writes the theoretical limits as CSV.")
    limits.add_argument("--p", type=int, default=None, help="Number of series, with --scenario.")
    limits.add_argument("--t-mult", type=float, default=None, help="T = t_mult * p, with --scenario.")
    _add_output(limits, "JSON or CSV")

    simulate = subcommands.add_parser("simulate", help="Monte-Carlo run of an estimator on a scenario.")
    simulate.add_argument("--scenario", choices=SCENARIO_NAMES, required=True)
    simulate.add_argument("--p", type=int, required=True, help="Number of series.")
    simulate.add_argument("--t-mult", type=float, required=True, help="T = t_mult * p.")
    simulate.add_argument("--reps", type=int, default=1000, help="Replications (default: 1000).")
    simulate.add_argument("--method", choices=METHODS, default="kstar")
    simulate.add_argument("--d-t", dest="d_t", type=float, default=None, help="Threshold; calibrated if omitted.")
    simulate.add_argument("--cap", type=int, default=None, help="Largest ratio index scanned.")
    simulate.add_argument("--calibration-reps", type=int, default=None)
    simulate.add_argument("--level", type=float, default=None, help="Calibration quantile level.")
    simulate.add_argument("--random-loadings", action="store_true", help="Draw a random orthonormal loading matrix.")
    simulate.add_argument(
        "--write-panel",
        type=pathlib.Path,
        default=None,
        help="Write the panel of replication 0 as CSV and exit without running the replications.",
    )
    _add_seed(simulate)
    _add_output(simulate, "JSON (or CSV when the name ends with .csv)")
    return parser


def run_config(args: argparse.Namespace) -> dict[str, Any]:
    return output_format.to_jsonable({key: value for key, value in vars(args).items()})


def _periods(p: int, t_mult: float) -> int:
    if not t_mult > 0:
        raise ValueError(f"--t-mult must be positive. Got: {t_mult}")
    return max(int(round(p * t_mult)), 2)


def _estimate(args: argparse.Namespace, executor: Executor) -> None:
    panel = read_panel_csv(args.input, transpose=args.transpose, demean=args.demean)
    spectrum = mhat_spectrum(panel)
    d_T = args.d_t
    calibration = None
    saturated = False
    trace = None
    if args.method in ("khat", "kstar"):
        if d_T is None:
            calibration = calibrate_dT(panel.p, panel.T, args.reps, args.level, args.seed, executor=executor)
            d_T = calibration.d_T
        config = EstimatorConfig(d_T=d_T, search_cap=args.cap, require_two=args.method == "kstar")
        estimate = k_hat(spectrum, config)
        k, saturated = estimate.k, estimate.saturated
    elif args.method == "ktilde":
        k = k_tilde(spectrum, args.cap or default_ratio_cap(panel.p, panel.T))
    else:
        trace = k_tilde_multistep(panel, args.steps, args.cap)
        k = trace[-1].cumulative_k
    logger.info(f"Estimated k={k} with {args.method} on p={panel.p}, T={panel.T}")
    report = output_format.create_estimate_report(
        spectrum=spectrum,
        p=panel.p,
        T=panel.T,
        method=args.method,
        k=k,
        d_T=d_T,
        saturated=saturated,
        calibration=calibration,
        multistep_trace=trace,
        run_config=run_config(args),
    )
    output_format.write_json(report, args.output)


def _calibrate(args: argparse.Namespace, executor: Executor) -> None:
    report = calibrate_dT(args.p, args.t, args.reps, args.level, args.seed, executor=executor)
    payload = output_format.to_jsonable(report)
    payload["run_config"] = run_config(args)
    output_format.write_json(payload, args.output)


def _transition(args: argparse.Namespace, executor: Executor) -> None:
    result = spike_limit(FactorParams(gamma0=args.gamma0, gamma1=args.gamma1, sigma2=args.sigma2), args.y)
    law = spectral_law(args.y)
    report = output_format.create_transition_report(
        result,
        region_bounds(args.y),
        t_b_plus=law.t_b_plus,
        b=law.b,
        sigma2=args.sigma2,
        run_config=run_config(args),
    )
    output_format.write_json(report, args.output)


def _region(args: argparse.Namespace, executor: Executor) -> None:
    output_format.write_csv(detectability_boundary(args.y, args.n_points, args.gamma0_max), args.output)


def _limits(args: argparse.Namespace, executor: Executor) -> None:
    if args.y is not None:
        payload = output_format.to_jsonable(spectral_law(args.y))
        payload["run_config"] = run_config(args)
        output_format.write_json(payload, args.output)
    elif args.y_grid is not None:
        start, stop, count = args.y_grid
        if count < 1 or count != int(count):
            raise ValueError(f"N of --y-grid must be a positive integer. Got: {count}")
        output_format.write_csv(t_at_b_plus_curve(np.linspace(start, stop, int(count))), args.output)
    else:
        if args.p is None or args.t_mult is None:
            raise ValueError("--scenario needs --p and --t-mult")
        spec = scenario_preset(args.scenario, args.p, _periods(args.p, args.t_mult))
        output_format.write_csv(theoretical_limits(spec), args.output)


def _simulate(args: argparse.Namespace, executor: Executor) -> None:
    spec = scenario_preset(
        args.scenario,
        args.p,
        _periods(args.p, args.t_mult),
        random_loadings=args.random_loadings,
    )
    if args.write_panel is not None:
        write_panel_csv(generate_panel(spec, args.seed), args.write_panel)
        return
    result = run_mc(
        spec,
        args.reps,
        args.method,
        args.seed,
        d_T=args.d_t,
        search_cap=args.cap,
        calibration_reps=args.calibration_reps,
        quantile_level=args.level,
        executor=executor,
    )
    table = decision_table(result)
    if args.output is not None and args.output.suffix.lower() == ".csv":
        output_format.write_csv(table, args.output)
    else:
        report = output_format.create_mc_report(result, table, run_config=run_config(args))
        output_format.write_json(report, args.output)


_HANDLERS: dict[str, Callable[[argparse.Namespace, Executor], None]] = {
    "estimate": _estimate,
    "calibrate": _calibrate,
    "transition": _transition,
    "region": _region,
    "limits": _limits,
    "simulate": _simulate,
}


def _check_paths(args: argparse.Namespace) -> None:
    if getattr(args, "input", None) is not None:
        ensure_readable_file(args.input)
    ensure_writable_destination(args.output)
    if getattr(args, "write_panel", None) is not None:
        ensure_writable_destination(args.write_panel)


@exit_codes
def _dispatch(args: argparse.Namespace) -> int:
    set_level(args.log_level)
    _check_paths(args)
    if args.threads is not None and args.threads < 1:
        raise ValueError(f"--threads must be at least 1. Got: {args.threads}")
    with create_thread_pool_executor(args.threads) as executor:
        _HANDLERS[args.subcommand](args, executor)
    return EXIT_OK


def parse_and_dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit code: 0 on success, 1 on computation errors, 2 on usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if args.subcommand in ("estimate", "simulate") and getattr(args, "d_t", None) is not None:
        if not 0.0 < args.d_t < 1.0:
            print_err(f"{parser.prog}: error: --d-t must lie in (0, 1)")
            return 2
    return _dispatch(args)


def main() -> None:
    sys.exit(parse_and_dispatch(sys.argv[1:]))
