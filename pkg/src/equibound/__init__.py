"""Exact and numerical upper bounds for equiangular line systems and
spherical two-distance sets.

The exact layers (closed-form windows, proof-chain certificates, the
two-distance assembly, the crossover analysis) run entirely in rational
arithmetic; the semidefinite layer solves in floating point and owns an
exact feasibility checker for auditing rounded iterates.
"""

from .bounds import (
    BoundResult,
    CertificateError,
    ProofChainCertificate,
    best_bound,
    gerzon_bound,
    main_theorem_bound,
    main_theorem_range,
    neumann_bound,
    relative_bound,
    verify_proof_chain,
    verify_proof_chain_symbolic,
)
from .analysis import case_bounds, crossover_k, crossover_report
from .gegenbauer import gegenbauer, gegenbauer_eval
from .refdata import ReferenceTable, load_table, m_bound_map, table3_matrix
from .sdpsolve import as_line_count, assemble, check_feasible_exact, solve
from .threepoint import s_affine, s_matrix, w_det, w_matrix
from .twodist import (
    g_table,
    g_upper,
    harmonic_bound,
    lift,
    lift_parameters,
    simplex_pairs_construction,
)

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "CertificateError",
    "ProofChainCertificate",
    "ReferenceTable",
    "as_line_count",
    "assemble",
    "best_bound",
    "case_bounds",
    "check_feasible_exact",
    "crossover_k",
    "crossover_report",
    "g_table",
    "g_upper",
    "gegenbauer",
    "gegenbauer_eval",
    "gerzon_bound",
    "harmonic_bound",
    "lift",
    "lift_parameters",
    "load_table",
    "m_bound_map",
    "main_theorem_bound",
    "main_theorem_range",
    "neumann_bound",
    "relative_bound",
    "s_affine",
    "s_matrix",
    "simplex_pairs_construction",
    "solve",
    "table3_matrix",
    "verify_proof_chain",
    "verify_proof_chain_symbolic",
    "w_det",
    "w_matrix",
]
