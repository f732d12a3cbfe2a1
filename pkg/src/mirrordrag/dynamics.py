"""Deceleration of a mirror under blackbody drag.

Model: d(γ m_A β c)/dt = -f(β) with f the closed-form drag density at the
bath's rest-frame temperature, held constant. The longitudinal force is
invariant under boosts along the motion, so the same f drives the lab-frame
momentum; this is a modelling assumption. With u = γβ and τ = t/t_c,
t_c = m_A c/(σT⁴), the equation becomes parameter free:

    du/dτ = -(32/3)·u·sqrt(1+u²)

The drag density already acts on both faces, so no extra factor of 2 enters.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum

from .exceptions import NumericalError, UsageError
from .kinematics import Beta, Gamma, as_beta, gamma
from .models import TrajectoryPoint
from .units import CODATA_2018, PhysicalConstants, Temperature, stefan_boltzmann

logger = logging.getLogger(__name__)

DRAG_COEFFICIENT = 32.0 / 3.0
DEFAULT_STEP = 1e-3


class IntegratorMethod(StrEnum):
    """Fixed-step integrators available for trajectories."""

    RK4 = "rk4"


@dataclass(frozen=True)
class MirrorParams:
    """Areal mass density of the mirror (kg/m²) and the bath it moves through."""

    areal_mass: float
    bath_temperature: Temperature

    def __post_init__(self) -> None:
        """Require a finite, strictly positive areal mass."""
        if not (math.isfinite(self.areal_mass) and self.areal_mass > 0.0):
            raise UsageError("areal_mass", self.areal_mass, "must be finite and > 0 kg/m^2")


def reduced_time_scale(params: MirrorParams, constants: PhysicalConstants = CODATA_2018) -> float:
    """Return t_c = m_A·c/(σT⁴) in seconds."""
    flux = stefan_boltzmann(constants) * params.bath_temperature.kelvin**4
    return params.areal_mass * constants.c / flux


def momentum_rate(u: float) -> float:
    """Return du/dτ for the reduced momentum u = γβ."""
    return -DRAG_COEFFICIENT * u * math.sqrt(1.0 + u * u)


def _inverse_momentum_rate(w: float) -> float:
    # dw/dτ for w = 1/u; bounded slope (32/3)·w/sqrt(1+w²) ≤ 32/3 at every speed
    return DRAG_COEFFICIENT * math.hypot(1.0, w)


def _log_inverse_momentum_rate(v: float) -> float:
    # dv/dτ for v = ln w; tends to the constant 32/3 as the mirror comes to rest
    return DRAG_COEFFICIENT * math.hypot(1.0, math.exp(-v))


def rk4_step(fn: Callable[[float], float], y: float, h: float) -> float:
    """Advance the autonomous scalar ODE y' = fn(y) by one classical Runge-Kutta step."""
    k1 = fn(y)
    k2 = fn(y + 0.5 * h * k1)
    k3 = fn(y + 0.5 * h * k2)
    k4 = fn(y + h * k3)
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _point(tau: float, w: float) -> TrajectoryPoint:
    norm = math.hypot(1.0, w)
    return TrajectoryPoint(tau=tau, beta=Beta(1.0 / norm), gamma=Gamma(norm / w))


def _point_from_log(tau: float, v: float) -> TrajectoryPoint:
    u = math.exp(-v)
    norm = math.hypot(1.0, u)
    return TrajectoryPoint(tau=tau, beta=Beta(u / norm), gamma=Gamma(norm))


def _positive_beta(beta0: Beta | float) -> Beta:
    b = as_beta(beta0)
    if b.value <= 0.0:
        raise UsageError("beta0", b.value, "initial velocity fraction must be > 0")
    return b


def integrate_trajectory(
    beta0: Beta | float,
    tau_end: float,
    step: float = DEFAULT_STEP,
    method: IntegratorMethod | str = IntegratorMethod.RK4,
) -> list[TrajectoryPoint]:
    """Integrate the mirror's deceleration from τ = 0 to ``tau_end``.

    While u = γβ ≥ 1 the stepped variable is w = 1/u, whose slope stays
    bounded as β → 1. Once w exceeds 1 the stepper switches to v = ln w, which
    grows linearly in τ, so long runs stay finite and β decays smoothly to 0.
    Both are exact changes of variable of du/dτ = -(32/3)·u·sqrt(1+u²).
    Samples are taken at τ = i·step; the last step is shortened to end on
    ``tau_end``.

    Args:
        beta0: Initial velocity fraction, > 0
        tau_end: Final reduced time, >= 0; 0 yields the initial point only
        step: Reduced time step, > 0
        method: Integrator; only RK4 is available

    Returns:
        Trajectory points in increasing τ, starting with (0, β₀)

    Raises:
        UsageError: On invalid β₀, τ_end, step or method
        NumericalError: If the state stops being finite

    """
    b0 = _positive_beta(beta0)
    if not (math.isfinite(tau_end) and tau_end >= 0.0):
        raise UsageError("tau_end", tau_end, "must be finite and >= 0")
    if not (math.isfinite(step) and step > 0.0):
        raise UsageError("step", step, "must be finite and > 0")
    try:
        IntegratorMethod(method)
    except ValueError as exc:
        raise UsageError("method", method, "only rk4 is available") from exc

    g0 = gamma(b0)
    w = 1.0 / (g0.value * b0.value)
    points = [TrajectoryPoint(tau=0.0, beta=b0, gamma=g0)]
    n_steps = 0 if tau_end == 0.0 else max(1, math.ceil(tau_end / step - 1e-9))
    log_w: float | None = None
    tau = 0.0
    for i in range(1, n_steps + 1):
        next_tau = tau_end if i == n_steps else i * step
        if log_w is None and w > 1.0:
            log_w = math.log(w)
            logger.debug("Switching to log-momentum stepping at tau=%s", tau)
        if log_w is None:
            w = rk4_step(_inverse_momentum_rate, w, next_tau - tau)
            state = w
        else:
            log_w = rk4_step(_log_inverse_momentum_rate, log_w, next_tau - tau)
            state = log_w
        if not math.isfinite(state):
            logger.error("Trajectory state became non-finite at tau=%s", next_tau)
            raise NumericalError("integrate_trajectory", f"non-finite state at tau={next_tau!r}")
        tau = next_tau
        points.append(_point(tau, w) if log_w is None else _point_from_log(tau, log_w))

    logger.debug("Integrated %s RK4 steps from beta0=%s to tau=%s", n_steps, b0.value, tau_end)
    return points


def analytic_solution(beta0: Beta | float, tau: float) -> Beta:
    """Return β(τ) from the closed form u(τ) = 1/sinh(asinh(1/u₀) + (32/3)τ).

    With s = asinh(1/u₀) + (32/3)τ this is β = 1/cosh(s).
    """
    b0 = _positive_beta(beta0)
    if not (math.isfinite(tau) and tau >= 0.0):
        raise UsageError("tau", tau, "must be finite and >= 0")
    if tau == 0.0:
        return b0
    u0 = gamma(b0).value * b0.value
    s = math.asinh(1.0 / u0) + DRAG_COEFFICIENT * tau
    if s > 700.0:
        return Beta(2.0 * math.exp(-s))
    return Beta(1.0 / math.cosh(s))


def analytic_momentum(beta0: Beta | float, tau: float) -> float:
    """Return u(τ) = γβ of the closed-form solution."""
    b0 = _positive_beta(beta0)
    u0 = gamma(b0).value * b0.value
    return 1.0 / math.sinh(math.asinh(1.0 / u0) + DRAG_COEFFICIENT * tau)
