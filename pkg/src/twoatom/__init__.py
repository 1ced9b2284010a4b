"""Dissipative dynamics and entanglement of two closely spaced two-level atoms."""

from .entanglement import (
    asymptotic_concurrence,
    concurrence,
    entropy_of_entanglement,
    is_ppt_separable,
    mes_asymptotic_concurrence,
    product_asymptotic_concurrence,
    spin_flip,
)
from .model import (
    IntegratorConfig,
    ModelParams,
    StepTooLargeError,
    evolve_series,
    integrate,
    lindblad_rhs,
    liouvillian,
)
from .propagator import (
    AsymptoticParams,
    DegenerateRatesError,
    asymptotic_params,
    asymptotic_state,
    c_max,
    evolve_bell_general,
    evolve_excited_ground_general,
    evolve_g1,
    stationary_matrix,
    t_gamma,
)
from .qmat import (
    InvalidStateError,
    NotHermitianError,
    NotPSDError,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    partial_transpose_a,
    sqrt_psd,
    validate_state,
)
from .states import (
    bell,
    bell_diagonal,
    bell_vector,
    mems,
    mems_h,
    mes,
    product_state,
    purity,
    werner,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticParams",
    "DegenerateRatesError",
    "IntegratorConfig",
    "InvalidStateError",
    "ModelParams",
    "NotHermitianError",
    "NotPSDError",
    "StepTooLargeError",
    "asymptotic_concurrence",
    "asymptotic_params",
    "asymptotic_state",
    "bell",
    "bell_diagonal",
    "bell_vector",
    "c_max",
    "concurrence",
    "entropy_of_entanglement",
    "evolve_bell_general",
    "evolve_excited_ground_general",
    "evolve_g1",
    "evolve_series",
    "hermitian_eigenvalues",
    "integrate",
    "is_ppt_separable",
    "kron",
    "lindblad_rhs",
    "liouvillian",
    "mems",
    "mems_h",
    "mes",
    "mes_asymptotic_concurrence",
    "partial_trace",
    "partial_transpose_a",
    "product_asymptotic_concurrence",
    "product_state",
    "purity",
    "spin_flip",
    "sqrt_psd",
    "stationary_matrix",
    "t_gamma",
    "validate_state",
    "werner",
]
