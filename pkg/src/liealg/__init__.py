"""Finite-dimensional matrix representations of polynomial differential operators.

Differentiation and coordinate-multiplication operators on a 1-D partition
become small dense matrices; tensor-grid lifting extends them to several
dimensions.  The package ships executable audits of the rank and nilpotency
structure of these matrices and two boundary-value experiments built on them.
"""

from .audits import (
    AuditReport,
    audit_diff_rank,
    audit_lifted_poly_rank,
    audit_rank_ladder,
    audit_nilpotent_poly_rank,
    counterexample_det,
    default_suite,
)
from .bvp import (
    BvpReport,
    two_point_coefficients,
    error_metrics,
    hyperbolic_rhs,
    shooting_two_point,
    solve_two_point,
    solve_hyperbolic,
)
from .lifting import (
    LiftedOperator,
    MultiIndexSpace,
    full_rank_predicate,
    grid_eval,
    lifted_compose,
    lifted_diff,
    lifted_identity,
    lifted_mult,
    poly_operator_matrix,
    realize,
    star,
    unstar,
)
from .linalg import (
    SingularSystemError,
    format_matrix,
    kron,
    lu_solve,
    mat_mul,
    numerical_rank,
)
from .operators import (
    OperatorPoly1D,
    apply_operator_poly,
    diff_matrix,
    differentiate_values,
    mult_matrix,
)
from .partitions import (
    Partition,
    interpolate_1d,
    jittered_partition,
    lagrange_eval,
    pi_weights,
    read_partition,
    tensor_interpolate,
    uniform_partition,
    write_partition,
)

__version__ = "0.1.0"
