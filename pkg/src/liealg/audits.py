"""Executable rank and nilpotency checks for the operator matrices.

Every audit compares a theoretical rank statement against its floating-point
observation and returns :class:`AuditReport` records.  The theory is exact
arithmetic; these audits run at desk scale (small n, moderate N) where
singular-value gaps comfortably clear the rank threshold.  Nilpotency of a
power is judged by norm decay, ``norm(H^k) <= tol * norm(H)^k``, since an
exactly zero floating-point power cannot be expected in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .lifting import full_rank_predicate, poly_operator_matrix, space_of
from .linalg import as_matrix, numerical_rank
from .operators import diff_matrix
from .partitions import Partition, jittered_partition, uniform_partition

__all__ = [
    "AuditReport",
    "NILPOTENCY_TOL",
    "audit_diff_rank",
    "audit_rank_ladder",
    "audit_nilpotent_poly_rank",
    "counterexample_det",
    "audit_lifted_poly_rank",
    "random_poly_rank_case",
    "default_suite",
    "reports_to_csv",
]

NILPOTENCY_TOL = 1e-8
MAX_LADDER_N = 12
MAX_LIFTED_TOTAL = 256


@dataclass(frozen=True)
class AuditReport:
    case_name: str
    expected: int | bool
    observed: int | bool
    tolerance: float

    def __post_init__(self):
        # normalize numpy scalars so formatting and equality are plain Python
        for field in ("expected", "observed"):
            value = getattr(self, field)
            object.__setattr__(self, field, bool(value) if isinstance(
                value, (bool, np.bool_)) else int(value))

    @property
    def passed(self) -> bool:
        return self.expected == self.observed


def _norm_inf(a: np.ndarray) -> float:
    return float(np.abs(a).sum(axis=1).max())


def _is_power_zero(h: np.ndarray, power: np.ndarray, k: int, tol: float) -> bool:
    """Norm-decay test for H^k == 0, scaled by norm(H)^k."""
    return _norm_inf(power) <= tol * _norm_inf(h) ** k


def _power_rank(h: np.ndarray, power: np.ndarray, k: int, rel_tol: float) -> int:
    """Rank of H^k, classifying a norm-decayed power as the zero matrix.

    The relative threshold of :func:`numerical_rank` is taken against the
    power's own largest singular value, which can never certify rank 0 of a
    round-off residue; the decay scale norm(H)^k can.
    """
    if k > 0 and _is_power_zero(h, power, k, rel_tol):
        return 0
    return numerical_rank(power, rel_tol)


def audit_diff_rank(p: Partition, rel_tol: float = 1e-8) -> tuple[AuditReport, AuditReport]:
    """Check that the differentiation matrix has rank n and vanishing (n+1)-th power."""
    n = p.n
    if n > MAX_LADDER_N:
        raise ValueError(
            f"conditioning guard: n={n} exceeds {MAX_LADDER_N}; beyond this the "
            "differentiation matrix is too ill-conditioned for float64 rank "
            "checks (exact-arithmetic verification is out of scope)")
    z = diff_matrix(p)
    power = np.linalg.matrix_power(z, n + 1)
    rank_report = AuditReport(f"diff_rank[n={n}]", n, numerical_rank(z, rel_tol), rel_tol)
    nil_report = AuditReport(
        f"diff_nilpotent[n={n}]", True,
        _is_power_zero(z, power, n + 1, NILPOTENCY_TOL), NILPOTENCY_TOL)
    return rank_report, nil_report


def audit_rank_ladder(h, rel_tol: float = 1e-8) -> list[AuditReport]:
    """Check rank H^k == n+1-k for k = 0..n+1, given H of rank n with H^(n+1) == 0."""
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise ValueError(f"rank ladder needs a square matrix, got shape {h.shape}")
    n = h.shape[0] - 1
    if numerical_rank(h, rel_tol) != n:
        raise ValueError(f"hypothesis failed: numerical rank of H is not {n}")
    top = np.linalg.matrix_power(h, n + 1)
    if not _is_power_zero(h, top, n + 1, NILPOTENCY_TOL):
        raise ValueError(f"hypothesis failed: H^{n + 1} is not numerically zero")
    reports = []
    power = np.eye(n + 1)
    for k in range(n + 2):
        observed = _power_rank(h, power, k, rel_tol)
        reports.append(AuditReport(f"rank_ladder[k={k}]", n + 1 - k, observed, rel_tol))
        power = power @ h
    return reports


def audit_nilpotent_poly_rank(b, coeffs, k: int, rel_tol: float = 1e-8) -> AuditReport:
    """Check rank(a_k B^k + ... + a_m B^m) == rank B^k for nilpotent B."""
    b = as_matrix(b)
    dim = b.shape[0]
    if b.shape[1] != dim:
        raise ValueError("nilpotent input must be square")
    top = np.linalg.matrix_power(b, dim)
    if not _is_power_zero(b, top, dim, NILPOTENCY_TOL):
        raise ValueError(f"hypothesis failed: B^{dim} is not numerically zero")
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.ndim != 1 or coeffs.size == 0:
        raise ValueError("need at least the coefficient a_k")
    if coeffs[0] == 0.0:
        raise ValueError("lowest-order coefficient a_k must be nonzero")
    base = np.linalg.matrix_power(b, k)
    poly = np.zeros_like(b)
    power = base
    for c in coeffs:
        poly += c * power
        power = power @ b
    expected = _power_rank(b, base, k, rel_tol)
    observed = numerical_rank(poly, rel_tol)
    name = f"nilpotent_poly_rank[k={k};m={k + coeffs.size - 1}]"
    return AuditReport(name, expected, observed, rel_tol)


# Fixed 2x2 nilpotent matrix of the variable-coefficient counterexample:
# det(I + diag(a, b) @ B) collapses to 1 + 2(b - a), which vanishes on a line.
COUNTEREXAMPLE_MATRIX = np.array([[-2.0, -1.0], [4.0, 2.0]])


def counterexample_det(a: float, b: float) -> float:
    """det(I_2 + diag(a, b) @ B) for the fixed nilpotent B; equals 1 + 2(b - a)."""
    return float(np.linalg.det(np.eye(2) + np.diag([a, b]) @ COUNTEREXAMPLE_MATRIX))


def audit_lifted_poly_rank(terms, ps: list[Partition], rel_tol: float = 1e-8) -> AuditReport:
    """Check the constant-term full-rank predicate against the numerical rank."""
    space = space_of(ps)
    if space.total > MAX_LIFTED_TOTAL:
        raise ValueError(f"size guard: N={space.total} exceeds {MAX_LIFTED_TOTAL}")
    predicate = full_rank_predicate(terms, ps)
    matrix = poly_operator_matrix(terms, ps)
    observed = numerical_rank(matrix, rel_tol) == space.total
    label = "+".join("{:g}z{}".format(c, "".join(str(int(x)) for x in e)) for c, e in terms)
    return AuditReport(f"lifted_poly_rank[{label}]", predicate, observed, rel_tol)


def random_poly_rank_case(rng: np.random.Generator, rel_tol: float) -> AuditReport:
    """One random polynomial-rank case on a normalized differentiation matrix.

    Rank statements are scale-invariant, so Z is normalized to unit spectral
    norm; this keeps the sampled polynomial's terms comparably scaled, which
    is what makes the float64 rank observation decisive.
    """
    n = int(rng.integers(2, 11))
    p = jittered_partition(rng, n)
    z = diff_matrix(p)
    b = z / np.linalg.svd(z, compute_uv=False)[0]
    k = int(rng.integers(0, min(n, 4) + 1))
    coeffs = rng.uniform(-2.0, 2.0, size=int(rng.integers(1, 5)))
    if abs(coeffs[0]) < 0.25:
        coeffs[0] = 0.25 if coeffs[0] >= 0 else -0.25
    report = audit_nilpotent_poly_rank(b, coeffs, k, rel_tol)
    return AuditReport(f"poly_rank_random[n={n};k={k}]", n + 1 - k, report.observed, rel_tol)


def _lifted_poly_family():
    """Exhaustive 2-D family: <= 3 monomials of total degree <= 2, coefficients +-1."""
    monomials = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    for size in (1, 2, 3):
        for subset in combinations(monomials, size):
            for coeffs in product((1.0, -1.0), repeat=size):
                yield list(zip(coeffs, subset))


def default_suite(seed: int = 42, rel_tol: float = 1e-8) -> list[AuditReport]:
    """The full audit suite; deterministic for a fixed seed."""
    rng = np.random.default_rng(seed)
    reports: list[AuditReport] = []

    reports += audit_diff_rank(Partition(np.array([0.0, 1.0])), rel_tol)
    reports += audit_diff_rank(Partition(np.array([0.0, 1.0, 2.0])), rel_tol)
    for t in range(100):
        n = int(rng.integers(2, 11))
        for r in audit_diff_rank(jittered_partition(rng, n), rel_tol):
            name = r.case_name.replace("diff_", f"diff_random{t:03d}_")
            reports.append(AuditReport(name, r.expected, r.observed, r.tolerance))

    for label, h in (
        ("z01", diff_matrix(Partition(np.array([0.0, 1.0])))),
        ("z012", diff_matrix(Partition(np.array([0.0, 1.0, 2.0])))),
        ("jordan2", np.array([[0.0, 1.0], [0.0, 0.0]])),
    ):
        for r in audit_rank_ladder(h, rel_tol):
            name = r.case_name.replace("rank_ladder", f"rank_ladder_{label}")
            reports.append(AuditReport(name, r.expected, r.observed, r.tolerance))

    reports.append(audit_nilpotent_poly_rank(
        diff_matrix(uniform_partition(0.0, 1.0, 4)), [1.0, 0.0, 1.0], 0, rel_tol))
    reports.append(audit_nilpotent_poly_rank(
        diff_matrix(Partition(np.array([0.0, 1.0, 2.0]))), [1.0], 2, rel_tol))
    reports.append(audit_nilpotent_poly_rank(COUNTEREXAMPLE_MATRIX, [3.0], 1, rel_tol))
    for _ in range(50):
        reports.append(random_poly_rank_case(rng, rel_tol))

    grid = np.linspace(-2.0, 2.0, 20)
    deviation = max(abs(counterexample_det(a, b) - (1.0 + 2.0 * (b - a)))
                    for a in grid for b in grid)
    reports.append(AuditReport("counterexample_identity_20x20", True, deviation <= 1e-12, 1e-12))
    reports.append(AuditReport("counterexample_zero_at(1;0.5)", True,
                               abs(counterexample_det(1.0, 0.5)) <= 1e-12, 1e-12))

    # unit node spacing keeps norm(Z) of order one, so +-1 coefficients stay
    # within the decisive range of the rank threshold
    ps3 = [Partition(np.arange(4.0)), Partition(np.arange(4.0) - 1.5)]
    reports.append(audit_lifted_poly_rank([(1.0, (0, 0)), (1.0, (1, 0)), (1.0, (0, 1))], ps3, rel_tol))
    reports.append(audit_lifted_poly_rank([(1.0, (2, 0)), (1.0, (0, 1))], ps3, rel_tol))
    ps2 = [Partition(np.arange(3.0)), Partition(np.arange(3.0))]
    reports.append(audit_lifted_poly_rank([(-7.0, (0, 0))], ps2, rel_tol))
    for terms in _lifted_poly_family():
        reports.append(audit_lifted_poly_rank(terms, ps3, rel_tol))

    return reports


def reports_to_csv(reports: list[AuditReport]) -> str:
    lines = ["caseName,expected,observed,tolerance,pass"]
    for r in reports:
        lines.append(f"{r.case_name},{_fmt(r.expected)},{_fmt(r.observed)},"
                     f"{r.tolerance:.4e},{_fmt(r.passed)}")
    return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
