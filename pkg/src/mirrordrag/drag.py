"""Drag force density, radiation pressure and their ratio for a perfectly reflecting mirror.

Reduced units throughout: f̂ = f·c/(σT⁴), P̂ = P·c/(σT⁴). The drag carries
sign(β); the force actually applied to the mirror is -drag_force(β).
"""

from __future__ import annotations

import logging

import numpy as np
from numpy.typing import NDArray

from .exceptions import UsageError
from .kinematics import Beta, as_beta, gamma, gamma_sq
from .models import DragReport, KineticFluxDrag, Regime
from .photon_gas import IntegrationPath, direction_moment, momentum_density_closed
from .quadrature import DEFAULT_SPEC, QuadratureSpec
from .units import CODATA_2018, PhysicalConstants, ReducedKind, Temperature, si_scale

logger = logging.getLogger(__name__)

NONRELATIVISTIC_LIMIT = 0.01
ULTRARELATIVISTIC_LIMIT = 0.9


def drag_force(beta: Beta | float) -> float:
    """Return f̂ = -2p̂ = (32/3)·β/(1-β²), the retarding force density carrying sign(β)."""
    return -2.0 * momentum_density_closed(beta).value


def radiation_pressure() -> float:
    """Return the blackbody pressure on a resting reflector, P̂ = 4/3."""
    return 4.0 / 3.0


def ratio(beta: Beta | float) -> float:
    """Return f/P = 8β/(1-β²)."""
    return drag_force(beta) / radiation_pressure()


def asymptote_nonrel(beta: Beta | float) -> float:
    """Return the small-velocity law f/P ≈ 8β."""
    return 8.0 * as_beta(beta).value


def asymptote_ultrarel(beta: Beta | float) -> float:
    """Return the β → 1 law f/P ≈ 4/(1-β).

    Raises:
        UsageError: If β <= 0

    """
    b = as_beta(beta)
    if b.value <= 0.0:
        raise UsageError("beta", b.value, "the ultrarelativistic asymptote needs beta > 0")
    return 4.0 / (1.0 - b.value)


def classify_regime(beta: Beta | float) -> Regime:
    """Label |β| < 0.01 nonrelativistic, |β| > 0.9 ultrarelativistic, anything between relativistic."""
    magnitude = abs(as_beta(beta).value)
    if magnitude < NONRELATIVISTIC_LIMIT:
        return Regime.NONRELATIVISTIC
    if magnitude > ULTRARELATIVISTIC_LIMIT:
        return Regime.ULTRARELATIVISTIC
    return Regime.RELATIVISTIC


def _flux_weight(mu: NDArray[np.float64]) -> NDArray[np.float64]:
    # each reflection reverses the normal wavevector component; |μ| is the flux factor
    return mu * np.abs(mu)


def kinetic_flux_drag_closed(beta: Beta | float) -> float:
    """Return the analytic reduction f̂_kin = (8/3)·βγ²·(3+β²)."""
    b = as_beta(beta)
    return (8.0 / 3.0) * b.value * gamma_sq(b) * (3.0 + b.value * b.value)


def kinetic_flux_drag(
    beta: Beta | float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    cross_check: bool = True,
) -> KineticFluxDrag:
    """Return the net reflected momentum flux on a two-sided mirror.

    f̂_kin = -2·(30/π⁴)·∫∫ x³·μ|μ|·n(x, μ, β) dμ dx. This is a cross-check of
    drag_force, never a replacement for it.

    Args:
        beta: Mirror velocity fraction
        spec: Quadrature tolerances and rule
        cross_check: Also run the brute-force 2D integral and record it

    Returns:
        KineticFluxDrag holding both paths and the closed-form drag

    Raises:
        QuadratureError: If an integral does not converge

    """
    b = as_beta(beta)
    reduced = direction_moment(_flux_weight, b, spec, IntegrationPath.BOSE_MOMENT)
    full_2d = None
    if cross_check:
        full_2d = -2.0 * direction_moment(_flux_weight, b, spec, IntegrationPath.FULL_2D).value
    result = KineticFluxDrag(
        f_kin_hat=-2.0 * reduced.value,
        f_hat=drag_force(b),
        f_kin_hat_2d=full_2d,
        error_estimate=2.0 * reduced.error_estimate,
    )
    logger.debug("Kinetic flux drag at beta=%s: %s (ratio to closed form %s)", b.value, result.f_kin_hat, result.ratio_to_drag_force)
    return result


def evaluate(
    beta: Beta | float,
    temperature: Temperature | None = None,
    constants: PhysicalConstants = CODATA_2018,
    with_kinetic: bool = False,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> DragReport:
    """Build the DragReport for one velocity and optional bath temperature.

    Args:
        beta: Mirror velocity fraction
        temperature: Bath temperature; SI values are filled in only when given
        constants: Physical constants for the SI conversion
        with_kinetic: Add the kinetic flux value (1D quadrature path)
        spec: Quadrature settings for the kinetic flux

    Returns:
        DragReport

    """
    b = as_beta(beta)
    f_hat = drag_force(b)
    p_hat = radiation_pressure()
    p_parallel = momentum_density_closed(b)
    f_kin_hat = kinetic_flux_drag(b, spec, cross_check=False).f_kin_hat if with_kinetic else None

    f_si = p_si = p_parallel_si = None
    if temperature is not None:
        force_scale = si_scale(ReducedKind.FORCE_DENSITY, temperature, constants)
        f_si = f_hat * force_scale
        p_si = p_hat * force_scale
        p_parallel_si = p_parallel.value * si_scale(ReducedKind.MOMENTUM_DENSITY, temperature, constants)

    return DragReport(
        beta=b,
        gamma=gamma(b),
        f_hat=f_hat,
        p_hat=p_hat,
        ratio=ratio(b),
        p_parallel_hat=p_parallel,
        regime=classify_regime(b),
        f_kin_hat=f_kin_hat,
        temperature=temperature,
        f_si_pa=f_si,
        p_si_pa=p_si,
        p_parallel_si=p_parallel_si,
    )
