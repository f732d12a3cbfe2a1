"""Physical constants, the Stefan-Boltzmann constant and reduced/SI conversion.

Every formula in the numerical core is dimensionless. SI values only appear
here, by multiplying a reduced quantity with the matching power of σT⁴/c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum

from scipy import constants as codata

from .exceptions import UsageError


@dataclass(frozen=True)
class PhysicalConstants:
    """Speed of light (m/s), reduced Planck constant (J s) and Boltzmann constant (J/K)."""

    c: float = codata.c
    hbar: float = codata.hbar
    k_B: float = codata.k

    def __post_init__(self) -> None:
        """Require every constant to be finite and strictly positive."""
        for name in ("c", "hbar", "k_B"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise UsageError(name, value, "physical constants must be finite and > 0")


CODATA_2018 = PhysicalConstants()


@dataclass(frozen=True)
class Temperature:
    """Rest-frame temperature of the blackbody bath in kelvin."""

    kelvin: float

    def __post_init__(self) -> None:
        """Require a finite, strictly positive temperature."""
        if not (math.isfinite(self.kelvin) and self.kelvin > 0.0):
            raise UsageError("temperature", self.kelvin, "temperature must be finite and > 0 K")


class ReducedKind(StrEnum):
    """Reduced quantities that can be converted back to SI."""

    FORCE_DENSITY = "force_density"
    PRESSURE = "pressure"
    MOMENTUM_DENSITY = "momentum_density"


def stefan_boltzmann(constants: PhysicalConstants = CODATA_2018) -> float:
    """Return σ = π² k_B⁴ / (60 ħ³ c²) in W m⁻² K⁻⁴."""
    return math.pi**2 * constants.k_B**4 / (60.0 * constants.hbar**3 * constants.c**2)


def si_scale(kind: ReducedKind | str, temperature: Temperature, constants: PhysicalConstants = CODATA_2018) -> float:
    """Return the factor that turns a reduced value of ``kind`` into SI units.

    Args:
        kind: Which reduction to undo
        temperature: Bath temperature
        constants: Physical constants to evaluate σ with

    Returns:
        σT⁴/c for force densities and pressures (Pa), σT⁴/c² for momentum densities (kg m⁻² s⁻¹)

    Raises:
        UsageError: If ``kind`` is not a known reduction

    """
    try:
        reduced_kind = ReducedKind(kind)
    except ValueError as exc:
        raise UsageError("kind", kind, f"expected one of {', '.join(k.value for k in ReducedKind)}") from exc

    flux = stefan_boltzmann(constants) * temperature.kelvin**4
    if reduced_kind is ReducedKind.MOMENTUM_DENSITY:
        return flux / constants.c**2
    return flux / constants.c


def to_si(
    reduced_value: float,
    kind: ReducedKind | str,
    temperature: Temperature,
    constants: PhysicalConstants = CODATA_2018,
) -> float:
    """Convert a reduced (dimensionless) value to SI units.

    Args:
        reduced_value: Dimensionless value f̂, P̂ or p̂
        kind: The reduction the value was produced with
        temperature: Bath temperature
        constants: Physical constants

    Returns:
        The value in Pa (force density, pressure) or kg m⁻² s⁻¹ (momentum density)

    """
    return reduced_value * si_scale(kind, temperature, constants)
