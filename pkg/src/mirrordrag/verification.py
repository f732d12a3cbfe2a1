"""Verification suites: closed-form identities, quadrature, Monte Carlo and dynamics oracles.

Each suite returns a VerifyReport of CheckResults. A check passes when
rel_err <= tol; checks with an expected value of 0 carry the absolute error
in rel_err, and "within kσ" checks express kσ relative to the expected value.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from enum import StrEnum

import numpy as np
from scipy.special import zeta

from . import drag, dynamics, montecarlo, photon_gas
from .exceptions import UsageError
from .kinematics import Beta, as_beta
from .models import CheckResult, VerifyReport
from .photon_gas import IntegrationPath
from .quadrature import DEFAULT_SPEC, QuadratureMethod, QuadratureSpec
from .units import CODATA_2018, ReducedKind, Temperature, stefan_boltzmann, to_si

logger = logging.getLogger(__name__)

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 1_000_000
KS_SAMPLES = 100_000
KS_CRITICAL = 0.00516
SIGMA_CODATA = 5.670374419e-8
MEAN_REST_FRAME_ENERGY = 4.0 * float(zeta(5)) / float(zeta(4))

QUADRATURE_BETAS = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99)
KINETIC_BETAS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
ENERGY_2D_BETAS = (0.0, 0.5, 0.9)
TRAJECTORY_BETAS = (0.01, 0.5, 0.9)
NONRELATIVISTIC_BETAS = (1e-4, 0.01)


class Suite(StrEnum):
    """Verification suites selectable from the command line."""

    CLOSEDFORM = "closedform"
    QUADRATURE = "quadrature"
    MONTECARLO = "montecarlo"
    DYNAMICS = "dynamics"
    ALL = "all"


def relative_error(expected: float, actual: float) -> float:
    """Return |actual - expected|/|expected|, or the absolute error when expected is 0."""
    if expected == 0.0:
        return abs(actual)
    return abs(actual - expected) / abs(expected)


def _check(name: str, beta: Beta | float | None, expected: float, actual: float, tol: float) -> CheckResult:
    rel_err = relative_error(expected, actual)
    passed = math.isfinite(actual) and rel_err <= tol
    beta_value = None if beta is None else as_beta(beta).value
    if not passed:
        logger.warning("Check %s failed at beta=%s: expected %r, got %r (rel_err %.3e > %.3e)", name, beta_value, expected, actual, rel_err, tol)
    return CheckResult(name=name, beta=beta_value, expected=expected, actual=actual, rel_err=rel_err, tol=tol, passed=passed)


def closedform_checks() -> list[CheckResult]:
    """Identity checks between the closed forms, the published checkpoints and the constants."""
    checks = []
    for b in np.linspace(0.0, 0.99, 64):
        beta = Beta(float(b))
        f_hat = drag.drag_force(beta)
        p_hat = photon_gas.momentum_density_closed(beta).value
        checks.append(_check("drag_equals_minus_twice_momentum", beta, f_hat, -2.0 * p_hat, 1e-14))
        checks.append(_check("ratio_times_pressure_equals_drag", beta, f_hat, drag.ratio(beta) * drag.radiation_pressure(), 1e-14))

    checks.append(_check("ratio_at_0.1", 0.1, 0.808081, drag.ratio(0.1), 1e-5 / 0.808081))
    # f/P lies within a decade of 1 at β = 0.1
    checks.append(_check("ratio_order_unity_log10", 0.1, 0.0, math.log10(drag.ratio(0.1)), 1.0))
    for b in (1e-4, 1e-3, 5e-3, 0.01):
        checks.append(_check("ratio_nonrelativistic_asymptote", b, drag.asymptote_nonrel(b), drag.ratio(b), 1.1e-4))
    near_light = 1.0 - 1e-6
    checks.append(_check("ultrarelativistic_divergence_coefficient", near_light, 3.999998, (1.0 - near_light) * drag.ratio(near_light), 1e-6 / 3.999998))

    checks.append(_check("stefan_boltzmann_codata", None, SIGMA_CODATA, stefan_boltzmann(CODATA_2018), 1e-9))
    checks.append(_check("si_drag_cmb", 0.1, 1.1237e-14, to_si(drag.drag_force(0.1), ReducedKind.FORCE_DENSITY, Temperature(2.725)), 1e-4))
    checks.append(_check("si_pressure_300k", None, 2.0427e-6, to_si(drag.radiation_pressure(), ReducedKind.PRESSURE, Temperature(300.0)), 1e-4))
    return checks


def quadrature_checks(spec: QuadratureSpec = DEFAULT_SPEC) -> list[CheckResult]:
    """Quadrature oracles: momentum density with both rules, energy density and the kinetic flux paths."""
    checks = []
    simpson = QuadratureSpec(spec.rel_tol, spec.abs_tol, spec.max_subdivisions, QuadratureMethod.ADAPTIVE_SIMPSON)
    gauss = QuadratureSpec(spec.rel_tol, spec.abs_tol, spec.max_subdivisions, QuadratureMethod.GAUSS_LEGENDRE_COMPOSITE)
    for b in QUADRATURE_BETAS:
        expected = photon_gas.momentum_density_closed(b).value
        by_gauss = photon_gas.momentum_density_quad(b, gauss).value
        by_simpson = photon_gas.momentum_density_quad(b, simpson).value
        checks.append(_check("momentum_density_quad_gauss_legendre", b, expected, by_gauss, 1e-8))
        checks.append(_check("momentum_density_quad_simpson", b, expected, by_simpson, 1e-8))
        checks.append(_check("quadrature_methods_agree", b, by_gauss, by_simpson, 1e-8))

    for b in ENERGY_2D_BETAS:
        energy = photon_gas.energy_density_quad(b, spec, IntegrationPath.FULL_2D).value
        checks.append(_check("energy_density_quad_2d", b, photon_gas.energy_density_closed(b), energy, 1e-8))

    for b in KINETIC_BETAS:
        kinetic = drag.kinetic_flux_drag(b, spec, cross_check=True)
        by_2d = math.nan if kinetic.f_kin_hat_2d is None else kinetic.f_kin_hat_2d
        checks.append(_check("kinetic_flux_paths_agree", b, kinetic.f_kin_hat, by_2d, 1e-8))
        checks.append(_check("kinetic_flux_closed_form", b, drag.kinetic_flux_drag_closed(b), kinetic.f_kin_hat, 1e-6))
        measured = math.nan if kinetic.ratio_to_drag_force is None else kinetic.ratio_to_drag_force
        checks.append(_check("kinetic_to_drag_ratio", b, (3.0 + b * b) / 4.0, measured, 1e-6))
        logger.warning("Kinetic flux drag differs from the closed-form drag at beta=%s: f_kin/f = %.9f", b, measured)
    return checks


def montecarlo_checks(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES, max_workers: int = 4) -> list[CheckResult]:
    """Monte Carlo oracles at β = 0.5 plus the KS test of the direction marginal."""
    beta = Beta(0.5)
    checks = []

    mu_expected = -4.0 * beta.value / (3.0 + beta.value**2)
    mu = montecarlo.estimate_mu_moment(beta, samples, seed, max_workers)
    checks.append(_check("mc_mu_moment_5sigma", beta, mu_expected, mu.mean, 5.0 * mu.std_error / abs(mu_expected)))
    checks.append(_check("mc_mu_moment_rel", beta, mu_expected, mu.mean, 2e-3))

    p_expected = photon_gas.momentum_density_closed(beta).value
    p_hat = montecarlo.estimate_momentum_density(beta, samples, seed, max_workers)
    checks.append(_check("mc_momentum_density_5sigma", beta, p_expected, p_hat.mean, 5.0 * p_hat.std_error / abs(p_expected)))
    checks.append(_check("mc_momentum_density_rel", beta, p_expected, p_hat.mean, 1e-2))

    energy = montecarlo.estimate_energy_mean(beta, samples, seed, max_workers)
    checks.append(_check("mc_rest_frame_energy_5sigma", beta, MEAN_REST_FRAME_ENERGY, energy.mean, 5.0 * energy.std_error / MEAN_REST_FRAME_ENERGY))

    ks = montecarlo.direction_ks_statistic(beta, KS_SAMPLES, seed)
    checks.append(_check("mc_direction_ks", beta, 0.0, ks, KS_CRITICAL))
    return checks


def _max_relative_deviation(beta0: float, tau_end: float, step: float) -> float:
    points = dynamics.integrate_trajectory(beta0, tau_end, step)
    return max(relative_error(dynamics.analytic_solution(beta0, p.tau).value, p.beta.value) for p in points)


def _analytic_residual(beta0: float, tau: float, h: float = 1e-4) -> float:
    """Relative residual of the closed-form u(τ) in du/dτ = momentum_rate(u), by a 5-point stencil."""
    u = [dynamics.analytic_momentum(beta0, tau + k * h) for k in (-2, -1, 1, 2)]
    derivative = (u[0] - 8.0 * u[1] + 8.0 * u[2] - u[3]) / (12.0 * h)
    return relative_error(dynamics.momentum_rate(dynamics.analytic_momentum(beta0, tau)), derivative)


def dynamics_checks() -> list[CheckResult]:
    """RK4 against the analytic solution, convergence order and the slow-mirror decay rate."""
    checks = []
    for b in TRAJECTORY_BETAS:
        points = dynamics.integrate_trajectory(b, 1.0, dynamics.DEFAULT_STEP)
        deviation = max(abs(dynamics.analytic_solution(b, p.tau).value - p.beta.value) for p in points)
        checks.append(_check("rk4_vs_analytic_max_abs_deviation", b, 0.0, deviation, 1e-10))
        for tau in (0.05, 0.5):
            checks.append(_check("analytic_solution_ode_residual", b, 0.0, _analytic_residual(b, tau), 1e-10))

    coarse = _max_relative_deviation(0.5, 1.0, 0.01)
    fine = _max_relative_deviation(0.5, 1.0, 0.005)
    order = math.log2(coarse / fine) if fine > 0.0 else math.nan
    checks.append(_check("rk4_convergence_order", 0.5, 4.0, order, 0.3 / 4.0))

    slow = 1e-4
    tail = dynamics.integrate_trajectory(slow, 0.1, dynamics.DEFAULT_STEP)[-1]
    rate = -math.log(tail.beta.value / slow) / tail.tau
    checks.append(_check("nonrelativistic_decay_rate", slow, dynamics.DRAG_COEFFICIENT, rate, 1e-3))

    for b in NONRELATIVISTIC_BETAS:
        points = dynamics.integrate_trajectory(b, 0.2, dynamics.DEFAULT_STEP)
        deviation = max(relative_error(math.exp(-dynamics.DRAG_COEFFICIENT * p.tau), p.beta.value / b) for p in points)
        checks.append(_check("nonrelativistic_exponential_decay", b, 0.0, deviation, 1e-3))
    return checks


def run_suite(
    name: Suite | str,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    max_workers: int = 4,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> VerifyReport:
    """Run one verification suite, or all of them in order.

    Args:
        name: Suite to run
        seed: Seed of the Monte Carlo streams
        samples: Monte Carlo sample count
        max_workers: Worker threads for Monte Carlo chunks
        spec: Quadrature settings for the quadrature suite

    Returns:
        VerifyReport; its seed is set only when Monte Carlo checks ran

    Raises:
        UsageError: If the suite name is unknown
        NumericalError: If a computation inside a suite fails

    """
    try:
        suite = Suite(name)
    except ValueError as exc:
        raise UsageError("suite", name, f"expected one of {', '.join(s.value for s in Suite)}") from exc

    runners: dict[Suite, Callable[[], list[CheckResult]]] = {
        Suite.CLOSEDFORM: closedform_checks,
        Suite.QUADRATURE: lambda: quadrature_checks(spec),
        Suite.MONTECARLO: lambda: montecarlo_checks(seed, samples, max_workers),
        Suite.DYNAMICS: dynamics_checks,
    }
    selected = list(runners) if suite is Suite.ALL else [suite]
    uses_seed = Suite.MONTECARLO in selected
    report = VerifyReport(suite=suite.value, seed=seed if uses_seed else None)
    for part in selected:
        logger.info("Running %s checks", part.value)
        report.checks.extend(runners[part]())
    logger.info("Verification %s: %s of %s checks passed", suite.value, sum(c.passed for c in report.checks), len(report.checks))
    return report
