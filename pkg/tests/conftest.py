import csv
import io
import math
from collections.abc import Callable

import numpy as np
import pytest
from scipy import integrate

from mirrordrag.quadrature import QuadratureMethod, QuadratureSpec


@pytest.fixture(params=[QuadratureMethod.GAUSS_LEGENDRE_COMPOSITE, QuadratureMethod.ADAPTIVE_SIMPSON], ids=["gauss_legendre", "simpson"])
def quadrature_spec(request: pytest.FixtureRequest) -> QuadratureSpec:
    return QuadratureSpec(method=request.param)


@pytest.fixture
def scipy_direction_moment() -> Callable[[Callable[[float], float], float], float]:
    """Independent (30/π⁴)·(π⁴/15)·∫ g(μ)/(γ(1+βμ))⁴ dμ computed with scipy.integrate.quad."""

    def moment(weight: Callable[[float], float], beta: float) -> float:
        g = 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))
        total = 0.0
        for lo, hi in ((-1.0, 0.0), (0.0, 1.0)):
            value, _ = integrate.quad(lambda mu: weight(mu) / (g * (1.0 + beta * mu)) ** 4, lo, hi, epsabs=1e-14, epsrel=1e-12, limit=200)
            total += value
        return 2.0 * total

    return moment


@pytest.fixture
def parse_csv() -> Callable[[str], list[dict[str, str]]]:
    def parse(text: str) -> list[dict[str, str]]:
        return list(csv.DictReader(io.StringIO(text)))

    return parse


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=12345))
