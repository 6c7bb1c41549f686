"""Matrix representations of d/dx and x on a partition, and polynomial operator assembly."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .partitions import Partition, pi_weights

__all__ = [
    "OperatorPoly1D",
    "diff_matrix",
    "mult_matrix",
    "apply_operator_poly",
    "differentiate_values",
]


def diff_matrix(p: Partition) -> np.ndarray:
    """Differentiation matrix of the partition: entry (j, k) is dl_k/dx(x_j).

    Assembled from the closed form

        Z[j, j] = sum_{m != j} 1 / (x_j - x_m),
        Z[j, k] = (pi_j / pi_k) / (x_j - x_k)   for k != j,

    never by numerically differentiating interpolants, so results are
    bit-reproducible.  Applied to nodal values of a polynomial of degree <= n
    it returns the exact nodal derivatives; its (n+1)-th power vanishes.
    """
    x = p.nodes
    pi = pi_weights(p)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    z = (pi[:, None] / pi[None, :]) / diff
    np.fill_diagonal(z, (1.0 / diff).sum(axis=1))
    return z


def mult_matrix(p: Partition) -> np.ndarray:
    """Diagonal matrix of the partition nodes (multiplication by the coordinate)."""
    return np.diag(p.nodes)


@dataclass(frozen=True)
class OperatorPoly1D:
    """Formal sum of terms coeff_k(x) * (d/dx)^k with polynomial coefficients.

    ``terms`` holds pairs ``(coeffs, order)`` where ``coeffs`` are the
    ascending-power coefficients of the polynomial multiplying the
    ``order``-th derivative.
    """

    terms: tuple[tuple[tuple[float, ...], int], ...]

    def __post_init__(self):
        terms = tuple((tuple(float(c) for c in coeffs), int(order))
                      for coeffs, order in self.terms)
        if not terms:
            raise ValueError("operator needs at least one term")
        orders = [order for _, order in terms]
        if len(set(orders)) != len(orders):
            raise ValueError(f"derivative orders must be distinct, got {orders}")
        if any(order < 0 for order in orders):
            raise ValueError("derivative orders must be non-negative")
        for coeffs, order in terms:
            if not coeffs or not any(c != 0.0 for c in coeffs):
                raise ValueError(f"coefficient polynomial of order-{order} term is zero")
        object.__setattr__(self, "terms", terms)


def apply_operator_poly(op: OperatorPoly1D, p: Partition) -> np.ndarray:
    """Collocation matrix sum_k diag(coeff_k at nodes) @ Z^k (with Z^0 = I).

    Coefficients are evaluated at the nodes by Horner's rule.  No
    invertibility is implied: non-constant coefficients can destroy full
    rank, so callers should watch the solver's condition estimate.
    """
    z = diff_matrix(p)
    size = p.n + 1
    out = np.zeros((size, size))
    for coeffs, order in sorted(op.terms, key=lambda t: t[1]):
        vals = npoly.polyval(p.nodes, coeffs)
        out += np.diag(vals) @ np.linalg.matrix_power(z, order)
    return out


def differentiate_values(p: Partition, values) -> np.ndarray:
    """Nodal derivatives of the interpolant of ``values`` (exact for degree <= n)."""
    values = np.asarray(values, dtype=float)
    if values.shape != (p.n + 1,):
        raise ValueError(f"expected {p.n + 1} values, got shape {values.shape}")
    return diff_matrix(p) @ values
