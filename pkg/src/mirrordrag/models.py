"""Data models for mirror-drag results and reports."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TYPE_CHECKING, Any

from .exceptions import UsageError
from .kinematics import Beta

if TYPE_CHECKING:
    from .kinematics import Gamma
    from .photon_gas import MomentumDensityParallel
    from .units import Temperature


def _json_number(value: float | None) -> float | None:
    """Return None for NaN and infinities, which strict JSON cannot carry."""
    if value is None or not math.isfinite(value):
        return None
    return value


class Regime(StrEnum):
    """Display labels for the velocity range; the thresholds are conventions, not physics."""

    NONRELATIVISTIC = "nonrelativistic"
    RELATIVISTIC = "relativistic"
    ULTRARELATIVISTIC = "ultrarelativistic"


class Spacing(StrEnum):
    """Grid spacing for a β sweep."""

    LINEAR = "linear"
    LOG_ONE_MINUS_BETA = "log_one_minus_beta"


@dataclass(frozen=True)
class KineticFluxDrag:
    """Reflected momentum-flux drag on a two-sided mirror, next to the closed-form drag it cross-examines."""

    f_kin_hat: float
    f_hat: float
    f_kin_hat_2d: float | None = None
    error_estimate: float = 0.0

    @property
    def path_rel_diff(self) -> float | None:
        """Relative difference between the two quadrature paths, when both ran."""
        if self.f_kin_hat_2d is None:
            return None
        if self.f_kin_hat == 0.0:
            return abs(self.f_kin_hat_2d)
        return abs(self.f_kin_hat_2d - self.f_kin_hat) / abs(self.f_kin_hat)

    @property
    def ratio_to_drag_force(self) -> float | None:
        """Return f̂_kin/f̂, undefined at β = 0."""
        if self.f_hat == 0.0:
            return None
        return self.f_kin_hat / self.f_hat


@dataclass(frozen=True)
class DragReport:
    """Reduced and SI drag, pressure and momentum density for one (β, T) point."""

    beta: Beta
    gamma: Gamma
    f_hat: float
    p_hat: float
    ratio: float
    p_parallel_hat: MomentumDensityParallel
    regime: Regime
    f_kin_hat: float | None = None
    temperature: Temperature | None = None
    f_si_pa: float | None = None
    p_si_pa: float | None = None
    p_parallel_si: float | None = None

    def as_dict(self) -> dict[str, Any]:
        """Return the JSON-ready view; SI fields appear only when a temperature was given."""
        data: dict[str, Any] = {
            "beta": self.beta.value,
            "gamma": self.gamma.value,
            "f_hat": self.f_hat,
            "p_hat": self.p_hat,
            "ratio": self.ratio,
            "p_parallel_hat": self.p_parallel_hat.value,
            "f_kin_hat": self.f_kin_hat,
            "regime": self.regime.value,
        }
        if self.temperature is not None:
            data["temperature_kelvin"] = self.temperature.kelvin
            data["f_si_pa"] = self.f_si_pa
            data["p_si_pa"] = self.p_si_pa
            data["p_parallel_si"] = self.p_parallel_si
        return data


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo sample mean with its standard error."""

    mean: float
    std_error: float
    n_samples: int
    seed: int


@dataclass(frozen=True)
class TrajectoryPoint:
    """One sample of a decelerating mirror in reduced time τ = t/t_c."""

    tau: float
    beta: Beta
    gamma: Gamma


@dataclass(frozen=True)
class SweepSpec:
    """A grid of β values to evaluate, optionally at a bath temperature."""

    beta_start: float
    beta_end: float
    steps: int
    spacing: Spacing = Spacing.LINEAR
    temperature: Temperature | None = None

    def __post_init__(self) -> None:
        """Validate the range and the number of grid points."""
        Beta(self.beta_start)
        Beta(self.beta_end)
        if not self.beta_start < self.beta_end:
            raise UsageError("beta_end", self.beta_end, f"must exceed beta_start={self.beta_start!r}")
        if self.steps < 2:
            raise UsageError("steps", self.steps, "a sweep needs at least 2 points")
        try:
            object.__setattr__(self, "spacing", Spacing(self.spacing))
        except ValueError as exc:
            raise UsageError("spacing", self.spacing, f"expected one of {', '.join(s.value for s in Spacing)}") from exc


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single verification check."""

    name: str
    beta: float | None
    expected: float
    actual: float
    rel_err: float
    tol: float
    passed: bool

    def as_dict(self) -> dict[str, Any]:
        """Return the JSON view using the report schema's key names."""
        return {
            "name": self.name,
            "beta": self.beta,
            "expected": _json_number(self.expected),
            "actual": _json_number(self.actual),
            "rel_err": _json_number(self.rel_err),
            "tol": _json_number(self.tol),
            "pass": self.passed,
        }


@dataclass
class VerifyReport:
    """All checks of one verification run."""

    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    seed: int | None = None

    @property
    def overall_pass(self) -> bool:
        """Return True when every check passed."""
        return all(check.passed for check in self.checks)

    def as_dict(self) -> dict[str, Any]:
        """Return the JSON view of the report."""
        return {
            "suite": self.suite,
            "checks": [check.as_dict() for check in self.checks],
            "overall_pass": self.overall_pass,
            "seed": self.seed,
        }
