"""Tests for the adaptive quadrature driver."""

import math
from collections.abc import Callable

import numpy as np
import pytest
from scipy import integrate
from scipy.special import zeta

from mirrordrag.exceptions import QuadratureError, UsageError
from mirrordrag.quadrature import (
    IntegrationResult,
    QuadratureMethod,
    QuadratureSpec,
    bose_integrand,
    bose_moment,
    integrate_interval,
    integrate_nested,
    integrate_semi_infinite,
)


class TestQuadratureSpec:
    """Test cases for QuadratureSpec validation."""

    def test_defaults(self) -> None:
        """Test default tolerances and rule."""
        spec = QuadratureSpec()
        assert (spec.rel_tol, spec.abs_tol, spec.max_subdivisions) == (1e-10, 1e-14, 2000)
        assert spec.method is QuadratureMethod.GAUSS_LEGENDRE_COMPOSITE

    @pytest.mark.parametrize("kwargs", [{"rel_tol": 0.0}, {"abs_tol": -1.0}, {"max_subdivisions": 0}, {"method": "trapezoid"}, {"rel_tol": math.nan}])
    def test_invalid_spec(self, kwargs: dict) -> None:
        """Test that invalid settings are usage errors."""
        with pytest.raises(UsageError):
            QuadratureSpec(**kwargs)

    def test_method_from_string(self) -> None:
        """Test that the method is coerced from its string value."""
        assert QuadratureSpec(method="adaptive_simpson").method is QuadratureMethod.ADAPTIVE_SIMPSON


class TestBoseMoment:
    """Test cases for the Bose moments."""

    def test_third_moment(self) -> None:
        """Test ∫x³/(eˣ-1) = π⁴/15."""
        assert bose_moment(3) == pytest.approx(math.pi**4 / 15.0, rel=1e-15)

    @pytest.mark.parametrize("s", [2, 3, 4])
    def test_against_scipy(self, s: int) -> None:
        """Test the tabulated moments against scipy's quad."""
        value, _ = integrate.quad(lambda x: x**s / math.expm1(x) if 0.0 < x < 700.0 else 0.0, 0.0, math.inf, epsabs=0.0, epsrel=1e-12)
        assert bose_moment(s) == pytest.approx(value, rel=1e-10)

    def test_unsupported_order(self) -> None:
        """Test that other orders are refused."""
        with pytest.raises(UsageError):
            bose_moment(5)
        with pytest.raises(UsageError):
            bose_integrand(1)


class TestIntegrateInterval:
    """Test cases for integrate_interval."""

    def test_odd_direction_moment(self, quadrature_spec: QuadratureSpec) -> None:
        """Test ∫₋₁¹ μ(1+μ/2)⁻⁴ dμ = -8β/(3(1-β²)³) at β = 0.5."""
        result = integrate_interval(lambda mu: mu / (1.0 + 0.5 * mu) ** 4, -1.0, 1.0, quadrature_spec)
        assert result.value == pytest.approx(-3.160494, abs=1e-6)
        assert result.value == pytest.approx(-8.0 * 0.5 / (3.0 * 0.75**3), rel=1e-10)

    def test_second_moment_half_range(self, quadrature_spec: QuadratureSpec) -> None:
        """Test ∫₀¹ μ²(1+βμ)⁻⁴ dμ = 1/(3(1+β)³) at β = 0.5."""
        result = integrate_interval(lambda mu: mu**2 / (1.0 + 0.5 * mu) ** 4, 0.0, 1.0, quadrature_spec)
        assert result.value == pytest.approx(1.0 / (3.0 * 1.5**3), rel=1e-10)

    def test_error_estimate_and_evaluations(self) -> None:
        """Test that the result carries a small error and counts evaluations."""
        result = integrate_interval(np.exp, 0.0, 1.0)
        assert result.value == pytest.approx(math.e - 1.0, rel=1e-14)
        assert 0.0 <= result.error_estimate <= 1e-10 * result.value
        assert result.evaluations > 0

    def test_breakpoints_do_not_change_value(self) -> None:
        """Test that interior points only change the partition."""
        f = lambda mu: 1.0 / (1.0 + 0.99 * mu) ** 4  # noqa: E731
        plain = integrate_interval(f, -1.0, 0.0)
        seeded = integrate_interval(f, -1.0, 0.0, points=(-0.99, -0.96, -0.8))
        assert seeded.value == pytest.approx(plain.value, rel=1e-10)

    def test_deterministic(self) -> None:
        """Test that repeated calls are bit-identical."""
        f = lambda x: np.sin(10.0 * x) ** 2  # noqa: E731
        assert integrate_interval(f, 0.0, 3.0).value == integrate_interval(f, 0.0, 3.0).value

    def test_budget_exhausted_reports_best_estimate(self) -> None:
        """Test QuadratureError with the best estimate attached."""
        spec = QuadratureSpec(rel_tol=1e-15, abs_tol=1e-300, max_subdivisions=3)
        with pytest.raises(QuadratureError) as excinfo:
            integrate_interval(np.sqrt, 0.0, 1.0, spec)
        assert excinfo.value.value == pytest.approx(2.0 / 3.0, rel=1e-3)
        assert excinfo.value.evaluations > 0

    def test_non_finite_integrand(self) -> None:
        """Test that a NaN integrand raises QuadratureError."""
        with pytest.raises(QuadratureError):
            integrate_interval(lambda x: np.full_like(x, np.nan), 0.0, 1.0)

    @pytest.mark.parametrize(("a", "b"), [(1.0, 0.0), (0.0, 0.0), (0.0, math.inf)])
    def test_invalid_limits(self, a: float, b: float) -> None:
        """Test that limits must be finite and increasing."""
        with pytest.raises(UsageError):
            integrate_interval(np.exp, a, b)


class TestSemiInfinite:
    """Test cases for integrate_semi_infinite and integrate_nested."""

    def test_bose_integral(self, quadrature_spec: QuadratureSpec) -> None:
        """Test ∫₀^∞ x³/(eˣ-1) dx against π⁴/15."""
        result = integrate_semi_infinite(bose_integrand(3), quadrature_spec)
        assert result.value == pytest.approx(math.pi**4 / 15.0, rel=1e-10)

    def test_scaled_bose_integral(self) -> None:
        """Test ∫ x³/(e^{ax}-1) dx = (π⁴/15)/a⁴."""
        a = 0.0709
        result = integrate_semi_infinite(bose_integrand(3, a))
        assert result.value == pytest.approx(math.pi**4 / 15.0 / a**4, rel=1e-10)

    def test_nested_exponential(self) -> None:
        """Test ∫₀¹∫₀^∞ e^{-x(1+μ)} dx dμ = ln 2."""
        result = integrate_nested(lambda x, mu: np.exp(-x * (1.0 + mu)), 0.0, 1.0)
        assert result.value == pytest.approx(math.log(2.0), rel=1e-10)
        assert result.evaluations > 0

    def test_bose_second_moment(self, quadrature_spec: QuadratureSpec) -> None:
        """Test ∫₀^∞ x²/(eˣ-1) dx = 2ζ(3)."""
        result = integrate_semi_infinite(bose_integrand(2), quadrature_spec)
        assert result.value == pytest.approx(2.0 * zeta(3), rel=1e-10)
        assert result.value == pytest.approx(2.404114, abs=1e-6)

    def test_exponential_moment(self, quadrature_spec: QuadratureSpec) -> None:
        """Test ∫₀^∞ x³e^{-2x} dx = Γ(4)/2⁴ = 3/8."""
        result = integrate_semi_infinite(_cubic_exponential, quadrature_spec)
        assert result.value == pytest.approx(3.0 / 8.0, rel=1e-10)


def _cubic_exponential(x: np.ndarray) -> np.ndarray:
    return x**3 * np.exp(-2.0 * x)


ANALYTIC_CASES = [
    pytest.param(lambda spec: integrate_semi_infinite(bose_integrand(3), spec), math.pi**4 / 15.0, id="bose_third"),
    pytest.param(lambda spec: integrate_semi_infinite(bose_integrand(2), spec), 2.0 * float(zeta(3)), id="bose_second"),
    pytest.param(lambda spec: integrate_semi_infinite(_cubic_exponential, spec), 3.0 / 8.0, id="cubic_exponential"),
    pytest.param(lambda spec: integrate_interval(np.square, 0.0, 1.0, spec), 1.0 / 3.0, id="square"),
    pytest.param(lambda spec: integrate_interval(lambda mu: mu / (1.0 + 0.5 * mu) ** 4, -1.0, 1.0, spec), -8.0 * 0.5 / (3.0 * 0.75**3), id="odd_direction_moment"),
    pytest.param(lambda spec: integrate_interval(np.zeros_like, -2.0, 3.0, spec), 0.0, id="zero"),
]


class TestAnalyticSet:
    """Test cases shared by the closed-form integrals."""

    def test_polynomial(self, quadrature_spec: QuadratureSpec) -> None:
        """Test ∫₀¹ x² dx = 1/3."""
        assert integrate_interval(np.square, 0.0, 1.0, quadrature_spec).value == pytest.approx(1.0 / 3.0, rel=1e-12)

    def test_zero_integrand(self, quadrature_spec: QuadratureSpec) -> None:
        """Test that a vanishing integrand integrates to exactly 0."""
        result = integrate_interval(np.zeros_like, -2.0, 3.0, quadrature_spec)
        assert result.value == 0.0
        assert result.error_estimate == 0.0

    @pytest.mark.parametrize(("integral", "exact"), ANALYTIC_CASES)
    def test_error_estimate_bounds_true_error(self, integral: Callable[[QuadratureSpec], IntegrationResult], exact: float, quadrature_spec: QuadratureSpec) -> None:
        """Test |value - exact| ≤ error_estimate."""
        result = integral(quadrature_spec)
        assert result.error_estimate >= 0.0
        assert abs(result.value - exact) <= result.error_estimate

    def test_linearity(self, quadrature_spec: QuadratureSpec) -> None:
        """Test ∫(αf + g) = α∫f + ∫g within the combined error estimates."""
        alpha = 2.5
        f, g = bose_integrand(3), _cubic_exponential
        combined = integrate_semi_infinite(lambda x: alpha * f(x) + g(x), quadrature_spec)
        by_f = integrate_semi_infinite(f, quadrature_spec)
        by_g = integrate_semi_infinite(g, quadrature_spec)
        bound = combined.error_estimate + alpha * by_f.error_estimate + by_g.error_estimate
        assert abs(combined.value - (alpha * by_f.value + by_g.value)) <= bound
