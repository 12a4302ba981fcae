"""K-spectra of Cos^lambda transforms on line bundles over Grassmannians.

The public surface is re-exported here; see the submodules for details.
"""

__version__ = "0.1.0"

from .errors import (
    CosGrassError,
    ConstraintViolation,
    TrivialCharacter,
    DimensionMismatch,
    NotInLattice,
    NotNeighbors,
    NoPath,
    DomainError,
    SingularBlock,
    KernelSingular,
    NotInL,
    NotASection,
    ConventionMismatch,
    ExcessiveRejection,
)
from .groupops import (
    DEFAULT_PHASE_SIGN,
    chi_L,
    cos_kernel,
    delta_density,
    haar_sample,
    kp_decompose,
    pi_action,
    section_smallest,
    theta,
    torus_point,
)
from .oracle import (
    EquivarianceResult,
    OracleResult,
    equivariance_check,
    mc_transform_at,
    projective_eigen_oracle,
    torus_eta_initial,
)
from .rootdata import CaseParams, make_case, omega, root_datum, reference_cases
from .specialfn import Status, log_gamma, siegel_log_gamma, siegel_ratio
from .spectrum import (
    SpectralValue,
    eta_closed,
    eta_initial,
    eta_recursive,
    evaluate_grid,
    sg_ratio,
    step_ratio,
)
from .weights import enumerate_weights, is_member, mu0, s_set

__all__ = [
    "__version__",
    "CosGrassError",
    "ConstraintViolation",
    "TrivialCharacter",
    "DimensionMismatch",
    "NotInLattice",
    "NotNeighbors",
    "NoPath",
    "DomainError",
    "SingularBlock",
    "KernelSingular",
    "NotInL",
    "NotASection",
    "ConventionMismatch",
    "ExcessiveRejection",
    "CaseParams",
    "make_case",
    "root_datum",
    "omega",
    "reference_cases",
    "Status",
    "log_gamma",
    "siegel_log_gamma",
    "siegel_ratio",
    "is_member",
    "mu0",
    "enumerate_weights",
    "s_set",
    "SpectralValue",
    "eta_initial",
    "eta_closed",
    "eta_recursive",
    "step_ratio",
    "sg_ratio",
    "evaluate_grid",
    "DEFAULT_PHASE_SIGN",
    "haar_sample",
    "kp_decompose",
    "cos_kernel",
    "chi_L",
    "torus_point",
    "delta_density",
    "section_smallest",
    "pi_action",
    "theta",
    "OracleResult",
    "EquivarianceResult",
    "torus_eta_initial",
    "mc_transform_at",
    "projective_eigen_oracle",
    "equivariance_check",
]
