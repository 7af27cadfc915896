"""Exact homology of quantum affine spaces and their semiclassical limits.

For an integer skew-symmetric matrix ``A`` the package builds the twisted
Koszul complex of the quantum affine space with ``q_ij = q**a_ij`` and the
Poisson complexes of the quadratic Poisson algebra ``{X_i, X_j} = a_ij X_i X_j``,
computes their multigraded homology exactly, and checks it against closed
forms.
"""

from .algebra import (
    InvalidMatrixError, LaurentPoly, QFraction, SkewMatrix, block_matrix,
    semiclassical_limit, validate_skew,
)
from .engine import BettiTable, ComplexSpec, SparseMatrix, betti_table, exact_rank, homology_dim
from .complexes import (
    dual_complex, hochschild_cochain_complex, koszul_complex, poisson_chain_complex,
    poisson_cochain_complex,
)
from .report import Report, homology_report, verify_report
from .verify import run_suite

__all__ = [
    "InvalidMatrixError", "LaurentPoly", "QFraction", "SkewMatrix", "block_matrix",
    "semiclassical_limit", "validate_skew",
    "BettiTable", "ComplexSpec", "SparseMatrix", "betti_table", "exact_rank", "homology_dim",
    "dual_complex", "hochschild_cochain_complex", "koszul_complex", "poisson_chain_complex",
    "poisson_cochain_complex",
    "Report", "homology_report", "verify_report", "run_suite",
]
