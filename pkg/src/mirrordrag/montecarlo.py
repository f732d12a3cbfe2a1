"""Monte Carlo photon sampling from the drifted Planck distribution.

Photons are drawn from the energy-weighted density ∝ x³·n(x, μ, β). Its
μ-marginal is ∝ (1+βμ)⁻⁴ and is inverted in closed form; given μ the rest-frame
energy y = γ(1+βμ)·x follows y³/(eʸ-1), drawn exactly as a ζ(4)-weighted
mixture of Gamma(4, j) variates. With this importance density the momentum
estimator reduces to û·E[μ].

Streams are Philox generators keyed by (seed, chunk index), so an estimate
depends only on (seed, n, β) and never on the worker count.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import stats

from .exceptions import UsageError
from .kinematics import Beta, as_beta, gamma
from .models import McEstimate
from .parallel import parallel_map
from .photon_gas import energy_density_closed

logger = logging.getLogger(__name__)

CHUNK_SIZE = 65536
ZETA_TERMS = 1000
SEED_LIMIT = 2**64
ZETA_4 = math.pi**4 / 90.0


@dataclass(frozen=True)
class PhotonSample:
    """A batch of photons: reduced frequency x, direction cosine μ and azimuth φ."""

    x: NDArray[np.float64]
    mu: NDArray[np.float64]
    phi: NDArray[np.float64]


def _validate_seed(seed: int) -> int:
    if not 0 <= int(seed) < SEED_LIMIT:
        raise UsageError("seed", seed, "seed must be a 64-bit unsigned integer")
    return int(seed)


def chunk_generator(seed: int, chunk_index: int) -> np.random.Generator:
    """Return the counter-based Philox stream keyed by (seed, chunk_index)."""
    seed = _validate_seed(seed)
    if chunk_index < 0:
        raise UsageError("chunk_index", chunk_index, "must be >= 0")
    return np.random.Generator(np.random.Philox(key=seed | (int(chunk_index) << 64)))


def direction_cdf(beta: Beta | float, mu: ArrayLike) -> NDArray[np.float64]:
    """Return the CDF [(1-β)⁻³ - (1+βμ)⁻³] / [(1-β)⁻³ - (1+β)⁻³] of the μ-marginal."""
    b = as_beta(beta).value
    mu_arr = np.asarray(mu, dtype=np.float64)
    if b == 0.0:
        return 0.5 * (mu_arr + 1.0)
    numerator = -np.expm1(3.0 * (math.log1p(-b) - np.log1p(b * mu_arr)))
    denominator = -math.expm1(3.0 * (math.log1p(-b) - math.log1p(b)))
    return numerator / denominator


def sample_direction(beta: Beta | float, u: ArrayLike) -> NDArray[np.float64]:
    """Invert direction_cdf at uniform variate(s) u in [0, 1].

    Written with log1p/expm1 so that the β → 0 limit μ = 2u-1 is reached without cancellation.
    """
    b = as_beta(beta).value
    u_arr = np.asarray(u, dtype=np.float64)
    if b == 0.0:
        return 2.0 * u_arr - 1.0
    spread = -math.expm1(3.0 * (math.log1p(-b) - math.log1p(b)))
    mu = np.expm1(math.log1p(-b) - np.log1p(-u_arr * spread) / 3.0) / b
    return np.clip(mu, -1.0, 1.0)


class PlanckPhotonSampler:
    """Immutable sampler of photons from the drifted, energy-weighted Planck law at one β."""

    def __init__(self, beta: Beta | float, zeta_terms: int = ZETA_TERMS) -> None:
        """Initialize the sampler.

        Args:
            beta: Mirror velocity fraction
            zeta_terms: Number of terms j of the ζ(4) mixture kept in the lookup table

        """
        self.beta = as_beta(beta)
        self.gamma = gamma(self.beta).value
        self._cumulative = np.cumsum(np.arange(1, zeta_terms + 1, dtype=np.float64) ** -4)
        self._cumulative.setflags(write=False)

    def doppler(self, mu: NDArray[np.float64]) -> NDArray[np.float64]:
        """Return γ(1+βμ) without range checks."""
        return self.gamma * (1.0 + self.beta.value * mu)

    def sample_direction(self, u: ArrayLike) -> NDArray[np.float64]:
        """Return direction cosines for uniform variates ``u``."""
        return sample_direction(self.beta, u)

    def sample_energy(self, mu: ArrayLike, rng: np.random.Generator) -> NDArray[np.float64]:
        """Return reduced frequencies x for the given directions.

        Draws j with probability j⁻⁴/ζ(4), then y ~ Gamma(shape 4, rate j), and
        returns x = y/(γ(1+βμ)).
        """
        mu_arr = np.asarray(mu, dtype=np.float64)
        size = mu_arr.shape
        order = np.searchsorted(self._cumulative, rng.random(size) * ZETA_4, side="left")
        order = np.minimum(order, self._cumulative.size - 1) + 1.0
        y = rng.standard_gamma(4.0, size) / order
        return y / self.doppler(mu_arr)

    def sample(self, rng: np.random.Generator, n: int) -> PhotonSample:
        """Draw ``n`` photons from ``rng``: direction first, then energy, then azimuth."""
        mu = self.sample_direction(rng.random(n))
        x = self.sample_energy(mu, rng)
        phi = 2.0 * math.pi * rng.random(n)
        return PhotonSample(x=x, mu=mu, phi=phi)


Statistic = Callable[[PhotonSample, PlanckPhotonSampler], NDArray[np.float64]]


def sample_energy(beta: Beta | float, mu: ArrayLike, rng: np.random.Generator) -> NDArray[np.float64]:
    """Return reduced frequencies for directions ``mu`` drawn from ``rng``."""
    return PlanckPhotonSampler(beta).sample_energy(mu, rng)


def _chunk_sizes(n: int) -> list[int]:
    if n < 1:
        raise UsageError("n", n, "at least one sample is required")
    full, rest = divmod(int(n), CHUNK_SIZE)
    return [CHUNK_SIZE] * full + ([rest] if rest else [])


def _estimate(beta: Beta | float, n: int, seed: int, statistic: Statistic, max_workers: int) -> McEstimate:
    seed = _validate_seed(seed)
    sampler = PlanckPhotonSampler(beta)
    sizes = _chunk_sizes(n)

    def run_chunk(size: int, index: int, total: int) -> tuple[float, float]:
        photons = sampler.sample(chunk_generator(seed, index), size)
        values = statistic(photons, sampler)
        logger.debug("Chunk %s of %s done (%s samples)", index + 1, total, size)
        return float(np.sum(values)), float(np.sum(values * values))

    sums = parallel_map(sizes, run_chunk, max_workers, logger)
    total = math.fsum(s for s, _ in sums)
    total_sq = math.fsum(s2 for _, s2 in sums)
    mean = total / n
    std_error = 0.0
    if n > 1:
        variance = max((total_sq - n * mean * mean) / (n - 1), 0.0)
        std_error = math.sqrt(variance / n)
    return McEstimate(mean=mean, std_error=std_error, n_samples=int(n), seed=seed)


def _direction(photons: PhotonSample, _sampler: PlanckPhotonSampler) -> NDArray[np.float64]:
    return photons.mu


def _rest_frame_energy(photons: PhotonSample, sampler: PlanckPhotonSampler) -> NDArray[np.float64]:
    return photons.x * sampler.doppler(photons.mu)


def estimate_mu_moment(beta: Beta | float, n: int, seed: int, max_workers: int = 4) -> McEstimate:
    """Estimate E[μ] under the energy-weighted density; the exact value is -4β/(3+β²)."""
    return _estimate(beta, n, seed, _direction, max_workers)


def estimate_momentum_density(beta: Beta | float, n: int, seed: int, max_workers: int = 4) -> McEstimate:
    """Estimate the reduced momentum density p̂ as û(β)·E[μ].

    û(β) = 4γ²(1+β²/3) is the normalisation of the sampled density, i.e. the
    reduced energy density of the drifted gas.
    """
    moment = estimate_mu_moment(beta, n, seed, max_workers)
    normalization = energy_density_closed(beta)
    return McEstimate(
        mean=normalization * moment.mean,
        std_error=normalization * moment.std_error,
        n_samples=moment.n_samples,
        seed=moment.seed,
    )


def estimate_energy_mean(beta: Beta | float, n: int, seed: int, max_workers: int = 4) -> McEstimate:
    """Estimate the mean rest-frame energy E[y]; exactly 24ζ(5)/(6ζ(4)) for every β."""
    return _estimate(beta, n, seed, _rest_frame_energy, max_workers)


def direction_ks_statistic(beta: Beta | float, n: int, seed: int) -> float:
    """Return the Kolmogorov-Smirnov distance between sampled μ values and direction_cdf."""
    sampler = PlanckPhotonSampler(beta)
    mu = np.concatenate([sampler.sample(chunk_generator(seed, i), size).mu for i, size in enumerate(_chunk_sizes(n))])
    return float(stats.kstest(mu, lambda m: direction_cdf(sampler.beta, m)).statistic)
