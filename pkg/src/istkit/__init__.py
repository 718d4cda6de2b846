"""Direct and inverse scattering transform for 1-D ZS-AKNS systems.

The package computes scattering data (a, b), reflection coefficients and
Marchenko kernels for potentials in L1-cap-L2, reconstructs potentials from a
single reflection coefficient through the left/right Marchenko equations and
the modulus-phase involution, and cross-validates the whole chain against an
independent Schroedinger-scattering solver through the Riccati substitution
q = u' + u^2.
"""

from .errors import ContractionError, GridMismatchError, InvariantViolation, IstkitError
from .grids import (
    FrequencyGrid,
    GridFunction,
    SpatialGrid,
    cauchy_minus,
    cauchy_plus,
    decay_profile,
    fourier_hat,
    fourier_minus,
    fourier_plus,
)
from .potentials import (
    MiuraPotential,
    Potential,
    ZeroEnergySolution,
    example_potential,
    miura_map,
    miura_pairing,
    zero_energy_solution,
)
from .scattering import (
    MarchenkoKernel,
    ReflectionCoefficient,
    ScatteringData,
    jost_row_solutions,
    marchenko_kernel,
    reflection,
    solve_scattering,
)
from .involution import ModulusProfile, a_from_modulus, involute
from .glm import GlmSolution, HankelOperator, reconstruct_half_line, solve_glm_left, solve_glm_right
from .pipeline import ReconstructionResult, invert, smooth_step, verify_bijection
from .oracle import SchrodingerScattering, check_extremal_solutions, schrodinger_reflection

__version__ = "0.1.0"

__all__ = [
    "ContractionError",
    "FrequencyGrid",
    "GlmSolution",
    "GridFunction",
    "GridMismatchError",
    "HankelOperator",
    "InvariantViolation",
    "IstkitError",
    "MarchenkoKernel",
    "MiuraPotential",
    "ModulusProfile",
    "Potential",
    "ReconstructionResult",
    "ReflectionCoefficient",
    "ScatteringData",
    "SchrodingerScattering",
    "SpatialGrid",
    "ZeroEnergySolution",
    "a_from_modulus",
    "cauchy_minus",
    "cauchy_plus",
    "check_extremal_solutions",
    "decay_profile",
    "example_potential",
    "fourier_hat",
    "fourier_minus",
    "fourier_plus",
    "invert",
    "involute",
    "jost_row_solutions",
    "marchenko_kernel",
    "miura_map",
    "miura_pairing",
    "reconstruct_half_line",
    "reflection",
    "schrodinger_reflection",
    "smooth_step",
    "solve_glm_left",
    "solve_glm_right",
    "solve_scattering",
    "verify_bijection",
    "zero_energy_solution",
]
