"""minorcert: exact and numeric certificates for contiguous-minor
determinant identities of Toeplitz-type and accretive matrices."""

from .detkit import (
    adjugate,
    det,
    det_bareiss,
    det_cofactor,
    det_condensation,
    s_functional,
)
from .identity import (
    CertificateReport,
    minor_scaling_check,
    specialization_certificate,
    verify_bt,
    verify_johnson_symbolic,
    verify_rank_one_expansion,
    verify_reduced_case,
    verify_skew_facts,
)
from .matrix import (
    Matrix,
    ToeplitzSpec,
    generic_skew_toeplitz,
    identity as identity_matrix,
    johnson_family,
    lower_shift,
    matrix_from_json,
    matrix_to_json,
    ones,
    toeplitz_build,
)
from .numaccretive import (
    AccretiveWitness,
    accretive_factorize,
    psd_check,
    remark45_repro,
    search_complex_violation,
    sqrt_psd,
    sym_eig,
    verify_accretive_inequality,
    verify_adjugate_accretive,
    verify_det_positive,
)
from .ring import ExactDivisionError, MultiPoly, variables

__version__ = "0.1.0"

__all__ = [
    "AccretiveWitness",
    "CertificateReport",
    "ExactDivisionError",
    "Matrix",
    "MultiPoly",
    "ToeplitzSpec",
    "accretive_factorize",
    "adjugate",
    "det",
    "det_bareiss",
    "det_cofactor",
    "det_condensation",
    "generic_skew_toeplitz",
    "identity_matrix",
    "johnson_family",
    "lower_shift",
    "matrix_from_json",
    "matrix_to_json",
    "minor_scaling_check",
    "ones",
    "psd_check",
    "remark45_repro",
    "s_functional",
    "search_complex_violation",
    "specialization_certificate",
    "sqrt_psd",
    "sym_eig",
    "toeplitz_build",
    "variables",
    "verify_accretive_inequality",
    "verify_adjugate_accretive",
    "verify_bt",
    "verify_det_positive",
    "verify_johnson_symbolic",
    "verify_rank_one_expansion",
    "verify_reduced_case",
    "verify_skew_facts",
]
