"""Drifted Planck occupation and photon-gas moments in the mirror frame.

All quantities are reduced: x = ħω/(k_BT), p̂ = p·c²/(σT⁴), û = u·c/(σT⁴).
A moment ∫ d³k g(k) n(k) of the gas becomes (30/π⁴)·∫₀^∞∫₋₁¹ x³ g n dμ dx,
the azimuth having been integrated analytically.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import UsageError
from .kinematics import Beta, as_beta, gamma, gamma_sq
from .quadrature import DEFAULT_SPEC, IntegrationResult, QuadratureSpec, bose_moment, integrate_interval, integrate_nested

MOMENT_PREFACTOR = 30.0 / math.pi**4

DirectionWeight = Callable[[NDArray[np.float64]], NDArray[np.float64]]


class IntegrationPath(StrEnum):
    """How the (x, μ) moment integrals are evaluated."""

    BOSE_MOMENT = "bose_moment"
    FULL_2D = "full_2d"


@dataclass(frozen=True)
class ReducedPhotonCoords:
    """A photon mode in reduced coordinates: frequency x, direction cosine μ and azimuth φ."""

    x: float
    mu: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        """Validate the coordinate ranges."""
        if not (math.isfinite(self.x) and self.x > 0.0):
            raise UsageError("x", self.x, "reduced frequency must be > 0; the occupancy diverges at x = 0")
        if not -1.0 <= self.mu <= 1.0:
            raise UsageError("mu", self.mu, "direction cosine must lie in [-1, 1]")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise UsageError("phi", self.phi, "azimuth must lie in [0, 2π)")


@dataclass(frozen=True)
class MomentumDensityParallel:
    """Reduced momentum density component along +v̂; antiparallel to the mirror velocity."""

    value: float
    error_estimate: float = 0.0


def drifted_planck(x: ArrayLike, mu: ArrayLike, beta: Beta | float) -> NDArray[np.float64]:
    """Vectorised occupation 1/(exp(γx(1+βμ)) - 1) without range checks."""
    b = as_beta(beta)
    a = gamma(b).value * (1.0 + b.value * np.asarray(mu, dtype=np.float64))
    with np.errstate(over="ignore", divide="ignore"):
        return 1.0 / np.expm1(a * np.asarray(x, dtype=np.float64))


def occupancy(coords: ReducedPhotonCoords, beta: Beta | float) -> float:
    """Return the mirror-frame occupation number of one photon mode.

    The value is independent of the azimuth and symmetric under (μ, β) → (-μ, -β).
    """
    return float(drifted_planck(coords.x, coords.mu, beta))


def _peak_breakpoints(beta: float, lo: float, hi: float) -> tuple[float, ...]:
    """Breakpoints clustering toward the μ end where 1+βμ is smallest."""
    if beta == 0.0:
        return ()
    width = (1.0 - abs(beta)) / abs(beta)
    if width >= 0.25:
        return ()
    end = -math.copysign(1.0, beta)
    points = []
    step = width
    while step < 0.5:
        points.append(end - math.copysign(step, end))
        step *= 4.0
    return tuple(p for p in points if lo < p < hi)


def direction_moment(
    weight: DirectionWeight,
    beta: Beta | float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    path: IntegrationPath = IntegrationPath.BOSE_MOMENT,
) -> IntegrationResult:
    """Return (30/π⁴)·∫∫ x³·weight(μ)·n(x, μ, β) dμ dx.

    The μ range is split at 0 and each half is integrated separately, which keeps
    the relative error control meaningful for integrands odd in μ.

    Args:
        weight: Vectorised direction weight g(μ)
        beta: Mirror velocity fraction
        spec: Quadrature tolerances and rule
        path: BOSE_MOMENT integrates x analytically per μ; FULL_2D integrates both variables numerically

    Returns:
        IntegrationResult for the reduced moment

    """
    b = as_beta(beta)
    g = gamma(b).value
    halves = ((-1.0, 0.0), (0.0, 1.0))
    results = []
    if IntegrationPath(path) is IntegrationPath.BOSE_MOMENT:
        moment = bose_moment(3)

        def reduced(mu: NDArray[np.float64]) -> NDArray[np.float64]:
            return moment * weight(mu) / (g * (1.0 + b.value * mu)) ** 4

        for lo, hi in halves:
            results.append(integrate_interval(reduced, lo, hi, spec, _peak_breakpoints(b.value, lo, hi)))
    else:

        def full(x: NDArray[np.float64], mu: float) -> NDArray[np.float64]:
            a = g * (1.0 + b.value * mu)
            with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
                values = x**3 / np.expm1(a * x)
            return float(weight(np.asarray(mu))) * np.where(x > 0.0, values, 0.0)

        for lo, hi in halves:
            results.append(integrate_nested(full, lo, hi, spec, _peak_breakpoints(b.value, lo, hi)))

    return IntegrationResult(
        value=MOMENT_PREFACTOR * math.fsum(r.value for r in results),
        error_estimate=MOMENT_PREFACTOR * math.fsum(r.error_estimate for r in results),
        evaluations=sum(r.evaluations for r in results),
    )


def momentum_density_closed(beta: Beta | float) -> MomentumDensityParallel:
    """Return p̂ = -(16/3)·β/(1-β²), odd in β and negative for β > 0."""
    b = as_beta(beta)
    return MomentumDensityParallel(-(16.0 / 3.0) * b.value * gamma_sq(b))


def momentum_density_quad(
    beta: Beta | float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    path: IntegrationPath = IntegrationPath.BOSE_MOMENT,
) -> MomentumDensityParallel:
    """Return p̂ = (30/π⁴)·∫∫ x³ μ n dμ dx by numerical integration.

    Raises:
        QuadratureError: If an integral does not converge within the budget

    """
    result = direction_moment(lambda mu: mu, beta, spec, path)
    return MomentumDensityParallel(result.value, result.error_estimate)


def energy_density_closed(beta: Beta | float) -> float:
    """Return û = 4γ²(1+β²/3); 4 at rest, even in β."""
    b = as_beta(beta)
    return 4.0 * gamma_sq(b) * (1.0 + b.value * b.value / 3.0)


def energy_density_quad(
    beta: Beta | float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    path: IntegrationPath = IntegrationPath.BOSE_MOMENT,
) -> IntegrationResult:
    """Return û = (30/π⁴)·∫∫ x³ n dμ dx by numerical integration."""
    return direction_moment(np.ones_like, beta, spec, path)
