"""Velocity fraction, Lorentz factor and Doppler factor."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import BetaRangeError, UsageError

BETA_MAX = 1.0 - 1e-9


@dataclass(frozen=True)
class Beta:
    """Signed velocity fraction v/c of the mirror."""

    value: float

    def __post_init__(self) -> None:
        """Reject non-finite values and magnitudes above BETA_MAX."""
        value = float(self.value)
        if not math.isfinite(value) or abs(value) > BETA_MAX:
            raise BetaRangeError(value, BETA_MAX)
        object.__setattr__(self, "value", value)

    def __float__(self) -> float:
        """Return the raw velocity fraction."""
        return self.value


@dataclass(frozen=True)
class Gamma:
    """Lorentz factor, always >= 1."""

    value: float

    def __float__(self) -> float:
        """Return the raw Lorentz factor."""
        return self.value


def as_beta(beta: Beta | float) -> Beta:
    """Coerce a float to a validated Beta, passing Beta instances through."""
    if isinstance(beta, Beta):
        return beta
    return Beta(beta)


def gamma_sq(beta: Beta | float) -> float:
    """Return 1/((1-β)(1+β)).

    The factored denominator keeps full relative precision as |β| approaches 1,
    where 1-β² would lose digits to cancellation.
    """
    b = as_beta(beta).value
    return 1.0 / ((1.0 - b) * (1.0 + b))


def gamma(beta: Beta | float) -> Gamma:
    """Return the Lorentz factor 1/sqrt((1-β)(1+β))."""
    b = as_beta(beta).value
    return Gamma(1.0 / math.sqrt((1.0 - b) * (1.0 + b)))


def doppler(beta: Beta | float, mu: ArrayLike) -> float | NDArray[np.float64]:
    """Return the reduced Doppler factor γ(1+βμ) of the drifted Planck exponent.

    Args:
        beta: Mirror velocity fraction
        mu: Direction cosine(s) of the photon wavevector relative to the velocity

    Returns:
        The factor, a float for scalar ``mu`` and an array otherwise

    Raises:
        UsageError: If any direction cosine lies outside [-1, 1]

    """
    b = as_beta(beta)
    mu_arr = np.asarray(mu, dtype=np.float64)
    if not np.all(np.abs(mu_arr) <= 1.0):
        raise UsageError("mu", mu, "direction cosine must lie in [-1, 1]")
    factor = gamma(b).value * (1.0 + b.value * mu_arr)
    if factor.ndim == 0:
        return float(factor)
    return factor
