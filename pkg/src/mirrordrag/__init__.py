"""Blackbody radiation drag on a relativistic mirror, with quadrature and Monte Carlo oracles."""

from .drag import (
    asymptote_nonrel,
    asymptote_ultrarel,
    classify_regime,
    drag_force,
    evaluate,
    kinetic_flux_drag,
    kinetic_flux_drag_closed,
    radiation_pressure,
    ratio,
)
from .dynamics import MirrorParams, analytic_solution, integrate_trajectory, reduced_time_scale
from .exceptions import (
    BetaRangeError,
    MirrorDragError,
    NumericalError,
    QuadratureError,
    UsageError,
    VerificationError,
)
from .kinematics import BETA_MAX, Beta, Gamma, doppler, gamma, gamma_sq
from .models import (
    CheckResult,
    DragReport,
    KineticFluxDrag,
    McEstimate,
    Regime,
    Spacing,
    SweepSpec,
    TrajectoryPoint,
    VerifyReport,
)
from .montecarlo import PlanckPhotonSampler, estimate_energy_mean, estimate_momentum_density, estimate_mu_moment, sample_direction, sample_energy
from .parallel import parallel_map, parallel_process
from .photon_gas import (
    IntegrationPath,
    MomentumDensityParallel,
    ReducedPhotonCoords,
    energy_density_closed,
    momentum_density_closed,
    momentum_density_quad,
    occupancy,
)
from .quadrature import IntegrationResult, QuadratureMethod, QuadratureSpec, integrate_interval, integrate_semi_infinite
from .units import CODATA_2018, PhysicalConstants, Temperature, stefan_boltzmann, to_si
from .verification import run_suite

__all__ = [
    # Closed forms
    "asymptote_nonrel",
    "asymptote_ultrarel",
    "classify_regime",
    "drag_force",
    "evaluate",
    "kinetic_flux_drag",
    "kinetic_flux_drag_closed",
    "radiation_pressure",
    "ratio",
    "energy_density_closed",
    "momentum_density_closed",
    "momentum_density_quad",
    "occupancy",
    # Dynamics
    "MirrorParams",
    "analytic_solution",
    "integrate_trajectory",
    "reduced_time_scale",
    # Exceptions
    "BetaRangeError",
    "MirrorDragError",
    "NumericalError",
    "QuadratureError",
    "UsageError",
    "VerificationError",
    # Kinematics and units
    "BETA_MAX",
    "Beta",
    "Gamma",
    "doppler",
    "gamma",
    "gamma_sq",
    "CODATA_2018",
    "PhysicalConstants",
    "Temperature",
    "stefan_boltzmann",
    "to_si",
    # Models
    "CheckResult",
    "DragReport",
    "IntegrationPath",
    "KineticFluxDrag",
    "McEstimate",
    "MomentumDensityParallel",
    "ReducedPhotonCoords",
    "Regime",
    "Spacing",
    "SweepSpec",
    "TrajectoryPoint",
    "VerifyReport",
    # Numerics
    "IntegrationResult",
    "QuadratureMethod",
    "QuadratureSpec",
    "integrate_interval",
    "integrate_semi_infinite",
    "PlanckPhotonSampler",
    "estimate_energy_mean",
    "estimate_momentum_density",
    "estimate_mu_moment",
    "sample_direction",
    "sample_energy",
    # Parallel processing
    "parallel_map",
    "parallel_process",
    # Verification
    "run_suite",
]
