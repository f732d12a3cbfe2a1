"""Tests for the drifted Planck distribution and photon-gas moments."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mirrordrag.exceptions import BetaRangeError, UsageError
from mirrordrag.kinematics import BETA_MAX
from mirrordrag.photon_gas import (
    IntegrationPath,
    ReducedPhotonCoords,
    drifted_planck,
    energy_density_closed,
    energy_density_quad,
    momentum_density_closed,
    momentum_density_quad,
    occupancy,
)
from mirrordrag.quadrature import QuadratureSpec


class TestOccupancy:
    """Test cases for the mirror-frame occupation number."""

    @pytest.mark.parametrize(("mu", "expected"), [(-1.0, 1.27990), (1.0, 0.214950)])
    def test_reference_values(self, mu: float, expected: float) -> None:
        """Test n(x=1, μ, β=0.5)."""
        assert occupancy(ReducedPhotonCoords(1.0, mu), 0.5) == pytest.approx(expected, rel=1e-5)

    def test_rest_frame_is_planck(self) -> None:
        """Test n(x, μ, 0) = 1/(eˣ-1) for every direction."""
        for mu in (-1.0, 0.0, 0.7):
            assert occupancy(ReducedPhotonCoords(2.0, mu), 0.0) == pytest.approx(1.0 / math.expm1(2.0), rel=1e-15)

    def test_azimuth_independent(self) -> None:
        """Test that φ does not enter."""
        assert occupancy(ReducedPhotonCoords(1.0, 0.3, 0.0), 0.4) == occupancy(ReducedPhotonCoords(1.0, 0.3, 4.0), 0.4)

    @pytest.mark.parametrize("coords", [(0.0, 0.0), (-1.0, 0.0), (1.0, 1.5), (1.0, 0.0, 7.0)])
    def test_invalid_coordinates(self, coords: tuple) -> None:
        """Test that x ≤ 0, |μ| > 1 and φ outside [0, 2π) are refused."""
        with pytest.raises(UsageError):
            ReducedPhotonCoords(*coords)

    def test_invalid_beta(self) -> None:
        """Test that β outside the admissible range is refused."""
        with pytest.raises(BetaRangeError):
            occupancy(ReducedPhotonCoords(1.0, 0.0), 1.0)

    @given(
        x=st.floats(min_value=1e-3, max_value=50.0),
        mu=st.floats(min_value=-1.0, max_value=1.0),
        beta=st.floats(min_value=-0.99, max_value=0.99),
    )
    def test_reflection_symmetry(self, x: float, mu: float, beta: float) -> None:
        """Test n(x, μ, β) = n(x, -μ, -β)."""
        assert occupancy(ReducedPhotonCoords(x, mu), beta) == occupancy(ReducedPhotonCoords(x, -mu), -beta)

    def test_vectorised(self) -> None:
        """Test array evaluation matches scalar evaluation."""
        x = np.array([0.5, 1.0, 3.0])
        out = drifted_planck(x, -1.0, 0.5)
        assert out[1] == occupancy(ReducedPhotonCoords(1.0, -1.0), 0.5)


class TestMomentumDensity:
    """Test cases for the momentum density."""

    def test_closed_form_values(self) -> None:
        """Test p̂ at rest and at β = 0.5."""
        assert momentum_density_closed(0.0).value == 0.0
        assert momentum_density_closed(0.5).value == pytest.approx(-32.0 / 9.0, rel=1e-15)

    @given(st.floats(min_value=0.0, max_value=BETA_MAX))
    def test_closed_form_odd_and_antiparallel(self, beta: float) -> None:
        """Test p̂(-β) = -p̂(β) and p̂ ≤ 0 for β ≥ 0."""
        assert momentum_density_closed(-beta).value == -momentum_density_closed(beta).value
        assert momentum_density_closed(beta).value <= 0.0

    @pytest.mark.parametrize("beta", [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99])
    def test_quadrature_matches_closed_form(self, beta: float, quadrature_spec: QuadratureSpec) -> None:
        """Test the 1D quadrature path against the closed form."""
        expected = momentum_density_closed(beta).value
        result = momentum_density_quad(beta, quadrature_spec)
        assert result.value == pytest.approx(expected, rel=1e-8, abs=1e-12)
        assert result.error_estimate >= 0.0

    def test_quadrature_matches_scipy(self, scipy_direction_moment) -> None:
        """Test the 1D path against an independent scipy integration."""
        assert momentum_density_quad(0.3).value == pytest.approx(scipy_direction_moment(lambda mu: mu, 0.3), rel=1e-9)

    def test_quadrature_odd_in_beta(self) -> None:
        """Test p̂_quad(-β) = -p̂_quad(β)."""
        assert momentum_density_quad(-0.6).value == pytest.approx(-momentum_density_quad(0.6).value, rel=1e-12)

    def test_full_2d_path(self) -> None:
        """Test the brute-force 2D oracle against the closed form."""
        assert momentum_density_quad(0.3, path=IntegrationPath.FULL_2D).value == pytest.approx(momentum_density_closed(0.3).value, rel=1e-8)


class TestEnergyDensity:
    """Test cases for the energy density."""

    def test_closed_form(self) -> None:
        """Test û = 4 at rest and 4γ²(1+β²/3) in motion."""
        assert energy_density_closed(0.0) == 4.0
        assert energy_density_closed(0.5) == pytest.approx(4.0 * 4.0 / 3.0 * (1.0 + 0.25 / 3.0), rel=1e-15)
        assert energy_density_closed(-0.5) == energy_density_closed(0.5)

    @pytest.mark.parametrize("beta", [0.0, 0.5, 0.9])
    def test_one_dimensional_path(self, beta: float) -> None:
        """Test the Bose-moment path against the closed form."""
        assert energy_density_quad(beta).value == pytest.approx(energy_density_closed(beta), rel=1e-9)

    def test_full_2d_path(self) -> None:
        """Test the 2D oracle against the closed form at β = 0.5."""
        assert energy_density_quad(0.5, path=IntegrationPath.FULL_2D).value == pytest.approx(energy_density_closed(0.5), rel=1e-8)
