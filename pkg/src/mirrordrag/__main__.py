import argparse
import logging
import os
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from mirrordrag import drag, dynamics, verification
from mirrordrag.exceptions import MirrorDragError, NumericalError, UsageError, VerificationError
from mirrordrag.file_utils import CSV_COLUMNS, TRAJECTORY_COLUMNS, render_csv, render_json, write_or_raise
from mirrordrag.kinematics import Beta
from mirrordrag.models import DragReport, Spacing, SweepSpec
from mirrordrag.parallel import clamp_workers, parallel_map
from mirrordrag.units import CODATA_2018, Temperature, stefan_boltzmann

LOG_FORMAT = "%(asctime)s [%(levelname)s]%(message)s"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

logger = logging.getLogger("mirrordrag")


@dataclass
class EvalRequest:
    """Configuration for a single-point evaluation."""

    beta: float = 0.0
    temperature_kelvin: float | None = None
    output_format: str = "json"
    with_kinetic: bool = False
    output: str | None = None


@dataclass
class SweepRequest:
    """Configuration for a β sweep written as CSV."""

    beta_start: float = 0.0
    beta_end: float = 0.9
    steps: int = 10
    spacing: str = Spacing.LINEAR.value
    temperature_kelvin: float | None = None
    output: str = "sweep.csv"
    with_oracles: bool = False
    max_workers: int = 4


@dataclass
class VerifyRequest:
    """Configuration for a verification run."""

    suite: str = verification.Suite.ALL.value
    seed: int = verification.DEFAULT_SEED
    samples: int = verification.DEFAULT_SAMPLES
    max_workers: int = 4


@dataclass
class TrajectoryRequest:
    """Configuration for a mirror deceleration run."""

    beta0: float = 0.1
    areal_mass_kg_m2: float = 1.0
    temperature_kelvin: float = 300.0
    tau_end: float = 1.0
    dt: float = dynamics.DEFAULT_STEP
    output: str | None = None


@dataclass
class ConstantsRequest:
    """Request for the constants dump; takes no options."""


Request = EvalRequest | SweepRequest | VerifyRequest | TrajectoryRequest | ConstantsRequest


def _temperature(kelvin: float | None) -> Temperature | None:
    return None if kelvin is None else Temperature(kelvin)


def _report_row(report: DragReport) -> tuple[float | None, ...]:
    return (
        report.beta.value,
        report.gamma.value,
        report.f_hat,
        report.p_parallel_hat.value,
        report.ratio,
        report.f_kin_hat,
        report.f_si_pa,
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        write_or_raise(os.path.realpath(output), text, logger)
    else:
        print(text, end="")


def sweep_grid(spec: SweepSpec) -> list[float]:
    """Return the β grid of a sweep with both endpoints exact.

    ``log_one_minus_beta`` spaces 1-β geometrically, concentrating points near β → 1.
    """
    if spec.spacing is Spacing.LOG_ONE_MINUS_BETA:
        grid = 1.0 - np.geomspace(1.0 - spec.beta_start, 1.0 - spec.beta_end, spec.steps)
    else:
        grid = np.linspace(spec.beta_start, spec.beta_end, spec.steps)
    values = [float(b) for b in grid]
    values[0] = spec.beta_start
    values[-1] = spec.beta_end
    return values


def cmd_eval(request: EvalRequest) -> int:
    """Evaluate drag, pressure and momentum density at one β and emit JSON or CSV."""
    report = drag.evaluate(Beta(request.beta), _temperature(request.temperature_kelvin), with_kinetic=request.with_kinetic)
    if request.output_format == "csv":
        text = render_csv(CSV_COLUMNS, [_report_row(report)])
    else:
        text = render_json(report.as_dict())
    _emit(text, request.output)
    return EXIT_OK


def cmd_sweep(request: SweepRequest) -> int:
    """Evaluate a β grid, in parallel, and write the rows in grid order as CSV."""
    spec = SweepSpec(
        beta_start=request.beta_start,
        beta_end=request.beta_end,
        steps=request.steps,
        spacing=request.spacing,
        temperature=_temperature(request.temperature_kelvin),
    )
    grid = sweep_grid(spec)
    logger.info("Sweeping %s points from beta=%s to beta=%s (%s)", len(grid), spec.beta_start, spec.beta_end, spec.spacing.value)

    def evaluate_point(beta: float, index: int, total: int) -> DragReport:
        logger.debug("Evaluating point %s of %s at beta=%s", index + 1, total, beta)
        return drag.evaluate(Beta(beta), spec.temperature, with_kinetic=request.with_oracles)

    reports = parallel_map(grid, evaluate_point, request.max_workers, logger)
    _emit(render_csv(CSV_COLUMNS, [_report_row(report) for report in reports]), request.output)
    return EXIT_OK


def cmd_verify(request: VerifyRequest) -> int:
    """Run a verification suite and print its JSON report.

    Raises:
        VerificationError: If any check failed; the report has been printed already

    """
    report = verification.run_suite(request.suite, seed=request.seed, samples=request.samples, max_workers=request.max_workers)
    print(render_json(report.as_dict()), end="")
    if not report.overall_pass:
        raise VerificationError(report)
    return EXIT_OK


def cmd_trajectory(request: TrajectoryRequest) -> int:
    """Integrate the mirror's deceleration and emit tau, t_seconds, beta, gamma as CSV."""
    params = dynamics.MirrorParams(areal_mass=request.areal_mass_kg_m2, bath_temperature=Temperature(request.temperature_kelvin))
    time_scale = dynamics.reduced_time_scale(params)
    points = dynamics.integrate_trajectory(request.beta0, request.tau_end, request.dt)
    logger.info("Trajectory: %s points, t_c = %s s", len(points), time_scale)
    rows = [(p.tau, p.tau * time_scale, p.beta.value, p.gamma.value) for p in points]
    _emit(render_csv(TRAJECTORY_COLUMNS, rows), request.output)
    return EXIT_OK


def cmd_constants(_request: ConstantsRequest) -> int:
    """Print the physical constants and the Stefan-Boltzmann constant derived from them."""
    constants = CODATA_2018
    print(render_json({"c": constants.c, "hbar": constants.hbar, "k_B": constants.k_B, "sigma": stefan_boltzmann(constants)}), end="")
    return EXIT_OK


def _process_request(request: Request) -> int:
    """Dispatch a request to its command.

    Args:
        request: The parsed command configuration

    Returns:
        Exit code of the command

    """
    if isinstance(request, EvalRequest):
        return cmd_eval(request)
    if isinstance(request, SweepRequest):
        return cmd_sweep(request)
    if isinstance(request, VerifyRequest):
        return cmd_verify(request)
    if isinstance(request, TrajectoryRequest):
        return cmd_trajectory(request)
    return cmd_constants(request)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(prog="mirror-drag", description="Blackbody radiation drag on a relativistic mirror.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Log debug details to stderr")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Only log warnings and errors")
    commands = parser.add_subparsers(dest="command", required=True)

    eval_parser = commands.add_parser("eval", help="Evaluate drag, pressure and momentum density at one velocity")
    eval_parser.add_argument("--beta", type=float, required=True, help="Mirror velocity fraction v/c, |beta| <= 1-1e-9")
    eval_parser.add_argument("--temperature-kelvin", type=float, default=None, help="Bath temperature; adds SI values")
    eval_parser.add_argument("--format", choices=["json", "csv"], default="json", help="Output format (default: json)")
    eval_parser.add_argument("--with-kinetic", action="store_true", help="Add the reflected momentum-flux value f_kin_hat")
    eval_parser.add_argument("--output", "-o", type=str, default=None, help="Write to this file instead of stdout")

    sweep_parser = commands.add_parser("sweep", help="Evaluate a grid of velocities and write CSV")
    sweep_parser.add_argument("--beta-start", type=float, required=True, help="First grid velocity")
    sweep_parser.add_argument("--beta-end", type=float, required=True, help="Last grid velocity")
    sweep_parser.add_argument("--steps", type=int, required=True, help="Number of grid points, >= 2")
    sweep_parser.add_argument("--spacing", choices=[s.value for s in Spacing], default=Spacing.LINEAR.value, help="Grid spacing (default: linear)")
    sweep_parser.add_argument("--temperature-kelvin", type=float, default=None, help="Bath temperature; fills f_si_pa")
    sweep_parser.add_argument("--output", "-o", type=str, required=True, help="CSV file to write")
    sweep_parser.add_argument("--with-oracles", action="store_true", help="Compute f_kin_hat by quadrature for every row")
    sweep_parser.add_argument("--max-workers", type=int, default=4, help="Maximum number of parallel workers (default: 4, max 16)")

    verify_parser = commands.add_parser("verify", help="Run verification suites and print a JSON report")
    verify_parser.add_argument("--suite", choices=[s.value for s in verification.Suite], default=verification.Suite.ALL.value, help="Suite to run (default: all)")
    verify_parser.add_argument("--seed", type=int, default=verification.DEFAULT_SEED, help="Monte Carlo seed (default: 42)")
    verify_parser.add_argument("--samples", type=int, default=verification.DEFAULT_SAMPLES, help="Monte Carlo samples (default: 1000000)")
    verify_parser.add_argument("--max-workers", type=int, default=4, help="Maximum number of Monte Carlo workers (default: 4, max 16)")

    trajectory_parser = commands.add_parser("trajectory", help="Integrate the deceleration of a mirror and write CSV")
    trajectory_parser.add_argument("--beta0", type=float, required=True, help="Initial velocity fraction, > 0")
    trajectory_parser.add_argument("--areal-mass-kg-m2", type=float, required=True, help="Mirror mass per unit area in kg/m^2")
    trajectory_parser.add_argument("--temperature-kelvin", type=float, required=True, help="Bath temperature in K")
    trajectory_parser.add_argument("--tau-end", type=float, required=True, help="Final reduced time t/t_c, >= 0")
    trajectory_parser.add_argument("--dt", type=float, default=dynamics.DEFAULT_STEP, help="Reduced time step (default: 1e-3)")
    trajectory_parser.add_argument("--output", "-o", type=str, default=None, help="Write to this file instead of stdout")

    commands.add_parser("constants", help="Print c, hbar, k_B and sigma as JSON")
    return parser


def _request_from_args(args: argparse.Namespace) -> Request:
    if args.command == "eval":
        return EvalRequest(
            beta=args.beta,
            temperature_kelvin=args.temperature_kelvin,
            output_format=args.format,
            with_kinetic=args.with_kinetic,
            output=args.output,
        )
    if args.command == "sweep":
        return SweepRequest(
            beta_start=args.beta_start,
            beta_end=args.beta_end,
            steps=args.steps,
            spacing=args.spacing,
            temperature_kelvin=args.temperature_kelvin,
            output=args.output,
            with_oracles=args.with_oracles,
            max_workers=clamp_workers(args.max_workers),
        )
    if args.command == "verify":
        return VerifyRequest(suite=args.suite, seed=args.seed, samples=args.samples, max_workers=clamp_workers(args.max_workers))
    if args.command == "trajectory":
        return TrajectoryRequest(
            beta0=args.beta0,
            areal_mass_kg_m2=args.areal_mass_kg_m2,
            temperature_kelvin=args.temperature_kelvin,
            tau_end=args.tau_end,
            dt=args.dt,
            output=args.output,
        )
    return ConstantsRequest()


def _configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)


def main(argv: Sequence[str] | None = None) -> int:
    """Parse command line arguments, run the command and return its exit code.

    Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical failure.
    """
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose, args.quiet)

    try:
        return _process_request(_request_from_args(args))
    except UsageError as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except VerificationError as e:
        logger.error("%s", e)
        return EXIT_VERIFICATION_FAILED
    except NumericalError as e:
        logger.error("%s", e)
        return EXIT_NUMERICAL
    except MirrorDragError as e:
        logger.error("%s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
