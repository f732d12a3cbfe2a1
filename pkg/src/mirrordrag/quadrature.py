"""Deterministic adaptive quadrature on finite and semi-infinite intervals.

Both rules run under the same globally adaptive driver: the interval with the
largest error estimate is bisected until the summed estimate drops below
max(rel_tol·|value|, abs_tol). Integrands are called with numpy arrays of
nodes and must return arrays of the same shape.
"""

from __future__ import annotations

import heapq
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from scipy.special import zeta

from .exceptions import QuadratureError, UsageError

logger = logging.getLogger(__name__)

Integrand = Callable[[NDArray[np.float64]], NDArray[np.float64]]
Integrand2D = Callable[[NDArray[np.float64], float], NDArray[np.float64]]

GAUSS_LEGENDRE_ORDER = 32
_ROUNDOFF_FLOOR = 50.0 * np.finfo(np.float64).eps

# ∫₀^∞ xˢ/(eˣ-1) dx = Γ(s+1) ζ(s+1)
_BOSE_MOMENTS = {
    2: 2.0 * float(zeta(3.0)),
    3: math.pi**4 / 15.0,
    4: 24.0 * float(zeta(5.0)),
}


class QuadratureMethod(StrEnum):
    """Panel rules available to the adaptive driver."""

    ADAPTIVE_SIMPSON = "adaptive_simpson"
    GAUSS_LEGENDRE_COMPOSITE = "gauss_legendre_composite"


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerance-driven integration request."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    method: QuadratureMethod = QuadratureMethod.GAUSS_LEGENDRE_COMPOSITE

    def __post_init__(self) -> None:
        """Validate tolerances, budget and method."""
        if not (self.rel_tol > 0.0 and math.isfinite(self.rel_tol)):
            raise UsageError("rel_tol", self.rel_tol, "must be > 0")
        if not (self.abs_tol > 0.0 and math.isfinite(self.abs_tol)):
            raise UsageError("abs_tol", self.abs_tol, "must be > 0")
        if self.max_subdivisions < 1:
            raise UsageError("max_subdivisions", self.max_subdivisions, "must be >= 1")
        try:
            object.__setattr__(self, "method", QuadratureMethod(self.method))
        except ValueError as exc:
            raise UsageError("method", self.method, f"expected one of {', '.join(m.value for m in QuadratureMethod)}") from exc


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class IntegrationResult:
    """Value of an integral with its error estimate and evaluation count."""

    value: float
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class _Panel:
    a: float
    b: float
    value: float
    error: float


def bose_moment(s: int) -> float:
    """Return the Bose moment ∫₀^∞ xˢ/(eˣ-1) dx for s in {2, 3, 4}.

    Raises:
        UsageError: For any other order

    """
    try:
        return _BOSE_MOMENTS[s]
    except (KeyError, TypeError) as exc:
        raise UsageError("s", s, "supported Bose moment orders are 2, 3 and 4") from exc


def bose_integrand(s: int, scale: float = 1.0) -> Integrand:
    """Return x ↦ xˢ/(exp(scale·x)-1) with its removable x = 0 value set to 0."""
    if s < 2:
        raise UsageError("s", s, "the x = 0 limit is only removable for s >= 2")

    def integrand(x: NDArray[np.float64]) -> NDArray[np.float64]:
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            values = x**s / np.expm1(scale * x)
        return np.where(x > 0.0, values, 0.0)

    return integrand


@lru_cache(maxsize=4)
def _gauss_legendre(order: int) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    return np.polynomial.legendre.leggauss(order)


def _evaluate(f: Integrand, nodes: NDArray[np.float64]) -> NDArray[np.float64]:
    values = np.broadcast_to(np.asarray(f(nodes), dtype=np.float64), nodes.shape)
    if not np.all(np.isfinite(values)):
        raise QuadratureError(math.nan, math.inf, nodes.size, "integrand returned a non-finite value")
    return values


def _simpson_panel(f: Integrand, a: float, b: float) -> tuple[float, float, int]:
    h = b - a
    fx = _evaluate(f, np.linspace(a, b, 5))
    coarse = h / 6.0 * (fx[0] + 4.0 * fx[2] + fx[4])
    fine = h / 12.0 * (fx[0] + 4.0 * fx[1] + 2.0 * fx[2] + 4.0 * fx[3] + fx[4])
    delta = (fine - coarse) / 15.0
    return float(fine + delta), float(abs(delta)), 5


def _gauss_legendre_panel(f: Integrand, a: float, b: float) -> tuple[float, float, int]:
    t, w = _gauss_legendre(GAUSS_LEGENDRE_ORDER)
    m = 0.5 * (a + b)
    half, quarter = 0.5 * (b - a), 0.25 * (b - a)
    nodes = np.concatenate((m + half * t, 0.5 * (a + m) + quarter * t, 0.5 * (m + b) + quarter * t))
    fx = _evaluate(f, nodes).reshape(3, GAUSS_LEGENDRE_ORDER)
    whole = half * float(w @ fx[0])
    halves = quarter * float(w @ fx[1]) + quarter * float(w @ fx[2])
    return halves, abs(halves - whole), nodes.size


_RULES = {
    QuadratureMethod.ADAPTIVE_SIMPSON: _simpson_panel,
    QuadratureMethod.GAUSS_LEGENDRE_COMPOSITE: _gauss_legendre_panel,
}


def _target(value: float, spec: QuadratureSpec) -> float:
    return max(spec.rel_tol * abs(value), spec.abs_tol)


def integrate_interval(
    f: Integrand,
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    points: Sequence[float] = (),
) -> IntegrationResult:
    """Integrate ``f`` over [a, b] to the tolerance in ``spec``.

    Args:
        f: Vectorised integrand, finite on [a, b]
        a: Lower limit
        b: Upper limit, must exceed ``a``
        spec: Tolerances, subdivision budget and panel rule
        points: Interior breakpoints seeding the initial partition

    Returns:
        IntegrationResult with the value, its error estimate and the evaluation count

    Raises:
        UsageError: If the limits are not finite with a < b
        QuadratureError: If the budget is exhausted or the integrand is not finite

    """
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise UsageError("interval", (a, b), "limits must be finite with a < b")

    rule = _RULES[spec.method]
    edges = [a, *sorted(p for p in points if a < p < b), b]
    heap: list[tuple[float, int, _Panel]] = []
    evaluations = 0
    total_value = 0.0
    total_error = 0.0
    for lo, hi in zip(edges[:-1], edges[1:], strict=True):
        value, error, count = rule(f, lo, hi)
        evaluations += count
        total_value += value
        total_error += error
        heapq.heappush(heap, (-error, len(heap), _Panel(lo, hi, value, error)))

    counter = len(heap)
    while total_error > _target(total_value, spec):
        if counter >= spec.max_subdivisions:
            best = math.fsum(entry[2].value for entry in heap)
            logger.debug("Quadrature budget of %s panels exhausted on [%s, %s]", spec.max_subdivisions, a, b)
            raise QuadratureError(best, total_error, evaluations, f"no convergence on [{a!r}, {b!r}]")
        _, _, panel = heapq.heappop(heap)
        mid = 0.5 * (panel.a + panel.b)
        total_value -= panel.value
        total_error -= panel.error
        for lo, hi in ((panel.a, mid), (mid, panel.b)):
            value, error, count = rule(f, lo, hi)
            evaluations += count
            total_value += value
            total_error += error
            heapq.heappush(heap, (-error, counter, _Panel(lo, hi, value, error)))
            counter += 1
        total_error = max(total_error, 0.0)

    panels = sorted((entry[2] for entry in heap), key=lambda p: p.a)
    value = math.fsum(p.value for p in panels)
    error = math.fsum(p.error for p in panels)
    return IntegrationResult(value=value, error_estimate=max(error, _ROUNDOFF_FLOOR * abs(value)), evaluations=evaluations)


def _compactified(f: Integrand) -> Integrand:
    """Map ∫₀^∞ f(x) dx onto [0, 1] through x = t/(1-t); t = 1 contributes 0."""

    def integrand(t: NDArray[np.float64]) -> NDArray[np.float64]:
        out = np.zeros_like(t)
        inside = t < 1.0
        ti = t[inside]
        one_minus = 1.0 - ti
        with np.errstate(over="ignore", invalid="ignore"):
            out[inside] = np.asarray(f(ti / one_minus), dtype=np.float64) / (one_minus * one_minus)
        return out

    return integrand


def integrate_semi_infinite(f: Integrand, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegrationResult:
    """Integrate an exponentially decaying ``f`` over [0, ∞).

    The substitution x = t/(1-t) with Jacobian 1/(1-t)² maps the range onto [0, 1).

    Args:
        f: Vectorised integrand; must be finite at x = 0
        spec: Tolerances, subdivision budget and panel rule

    Returns:
        IntegrationResult in the original variable

    """
    return integrate_interval(_compactified(f), 0.0, 1.0, spec)


def integrate_nested(
    f: Integrand2D,
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    points: Sequence[float] = (),
) -> IntegrationResult:
    """Integrate ∫_a^b ∫_0^∞ f(x, μ) dx dμ as an iterated integral.

    Each outer node evaluates its own adaptive semi-infinite x-integral, so the
    outer integrand is smooth wherever the inner one converges.

    Args:
        f: Integrand vectorised in x for a scalar μ
        a: Lower outer limit
        b: Upper outer limit
        spec: Tolerances applied to both the inner and the outer integral
        points: Interior outer breakpoints

    Returns:
        IntegrationResult; evaluations count inner integrand calls, the error
        estimate adds the largest inner estimate scaled by the outer width

    """
    inner_error = 0.0
    inner_evaluations = 0

    def outer(mu: NDArray[np.float64]) -> NDArray[np.float64]:
        nonlocal inner_error, inner_evaluations
        values = np.empty_like(mu)
        for i, m in enumerate(mu):
            result = integrate_semi_infinite(lambda x, m=float(m): f(x, m), spec)
            values[i] = result.value
            inner_error = max(inner_error, result.error_estimate)
            inner_evaluations += result.evaluations
        return values

    result = integrate_interval(outer, a, b, spec, points)
    return IntegrationResult(
        value=result.value,
        error_estimate=result.error_estimate + (b - a) * inner_error,
        evaluations=inner_evaluations,
    )
