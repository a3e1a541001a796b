"""Fractional-derivative mechanics and WKB wave construction.

Layers, bottom up:

- fracops: uniform-grid Riemann-Liouville derivatives via the
  Grunwald-Letnikov kernel, with closed-form oracles
- mechanics: a quadratic Lagrangian family in two fractional
  velocities and its Legendre transform
- hamilton_jacobi: additive separation of the principal function in
  the transformed coordinates
- wkb: the 1/sqrt(p) exp(iS/hbar) wave field and finite-difference
  eigen-checks of the momentum and Hamiltonian operators
- verification: the oracle suite behind `fracwkb verify`
- cli: command-line front end
"""

from .errors import (
    ForbiddenRegionError,
    GammaPoleError,
    NonFiniteInputError,
    NonpositiveMomentumError,
    StepTooLargeError,
    ZeroEnergyError,
)
from .fracops import (
    FractionalOrder,
    SampledFunction,
    TimeGrid,
    gamma,
    gl_weights,
    interior_mask,
    left_rl_derivative,
    right_rl_derivative,
    rl_power_rule,
)
from .hamilton_jacobi import (
    EnergyPartition,
    PrincipalFunction,
    TransformedPoint,
    evaluate_S,
    hj_residual,
    lambda_constants,
    momenta_from_S,
    separate,
)
from .mechanics import (
    HamiltonRHS,
    KinematicState,
    LagrangianSpec,
    Momenta,
    canonical_momenta,
    example1,
    example2,
    hamilton_rhs,
    legendre_transform,
)
from .reporting import ReportRecord, format_csv, format_json, format_table
from .wkb import (
    OperatorResult,
    WaveField,
    apply_hamiltonian,
    apply_momentum,
    build_wavefunction,
    classical_limit_check,
    probability_density,
)

__version__ = "0.1.0"

__all__ = [
    "ForbiddenRegionError",
    "GammaPoleError",
    "NonFiniteInputError",
    "NonpositiveMomentumError",
    "StepTooLargeError",
    "ZeroEnergyError",
    "FractionalOrder",
    "SampledFunction",
    "TimeGrid",
    "gamma",
    "gl_weights",
    "interior_mask",
    "left_rl_derivative",
    "right_rl_derivative",
    "rl_power_rule",
    "EnergyPartition",
    "PrincipalFunction",
    "TransformedPoint",
    "evaluate_S",
    "hj_residual",
    "lambda_constants",
    "momenta_from_S",
    "separate",
    "HamiltonRHS",
    "KinematicState",
    "LagrangianSpec",
    "Momenta",
    "canonical_momenta",
    "example1",
    "example2",
    "hamilton_rhs",
    "legendre_transform",
    "ReportRecord",
    "format_csv",
    "format_json",
    "format_table",
    "OperatorResult",
    "WaveField",
    "apply_hamiltonian",
    "apply_momentum",
    "build_wavefunction",
    "classical_limit_check",
    "probability_density",
    "__version__",
]
