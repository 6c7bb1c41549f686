"""Tensor-grid lifting of 1-D operator matrices to the full grid.

Grid ordering contract
----------------------
A node of the d-dimensional grid is addressed by a multi-index
(i_1, ..., i_d) with 0 <= i_alpha <= n_alpha.  Its 1-based linear index is

    star(i) = i_d (n_1+1)...(n_{d-1}+1) + ... + i_2 (n_1+1) + i_1 + 1,

so the dimension-1 index varies fastest.  This single convention fixes
everything else in the module: grid value vectors are filled in star order,
and a lifted operator with per-dimension factors (F_1, ..., F_d) realizes
concretely as the conventional Kronecker product of the factors in
*reversed* order, kron(F_d, ..., F_1), because the conventional product
varies its second factor's index fastest.  The realization is also exactly
the entrywise rule

    M[star(i), star(j)] = prod_alpha F_alpha[i_alpha, j_alpha],

which the test suite checks against the Kronecker route.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .linalg import as_matrix, numerical_rank
from .operators import diff_matrix, mult_matrix
from .partitions import Partition

__all__ = [
    "MultiIndexSpace",
    "LiftedOperator",
    "star",
    "unstar",
    "space_of",
    "lifted_identity",
    "lifted_diff",
    "lifted_mult",
    "realize",
    "lifted_compose",
    "grid_eval",
    "full_rank_predicate",
    "poly_operator_matrix",
    "realized_rank",
]


@dataclass(frozen=True)
class MultiIndexSpace:
    """Index set of a tensor grid with per-dimension maxima (n_1, ..., n_d)."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if len(dims) < 1 or any(n < 1 for n in dims):
            raise ValueError(f"need d >= 1 dimensions with n_alpha >= 1, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(n + 1 for n in self.dims)

    @property
    def total(self) -> int:
        """Total number of grid nodes N."""
        return prod(self.sizes)


def star(index, space: MultiIndexSpace) -> int:
    """1-based linear index of a multi-index; dimension 1 varies fastest."""
    index = tuple(int(i) for i in index)
    if len(index) != space.d:
        raise ValueError(f"multi-index length {len(index)} != dimension {space.d}")
    linear = 0
    for i, n in zip(reversed(index), reversed(space.dims)):
        if not 0 <= i <= n:
            raise ValueError(f"multi-index component {i} out of range 0..{n}")
        linear = linear * (n + 1) + i
    return linear + 1


def unstar(linear: int, space: MultiIndexSpace) -> tuple[int, ...]:
    """Multi-index of a 1-based linear index (inverse of :func:`star`)."""
    if not 1 <= linear <= space.total:
        raise ValueError(f"linear index {linear} out of range 1..{space.total}")
    rest = linear - 1
    out = []
    for size in space.sizes:
        out.append(rest % size)
        rest //= size
    return tuple(out)


@dataclass(frozen=True)
class LiftedOperator:
    """Per-dimension factors of a tensor-product operator; ``None`` marks identity."""

    space: MultiIndexSpace
    factors: tuple[np.ndarray | None, ...]

    def __post_init__(self):
        if len(self.factors) != self.space.d:
            raise ValueError(f"expected {self.space.d} factors, got {len(self.factors)}")
        checked = []
        for size, f in zip(self.space.sizes, self.factors):
            if f is None:
                checked.append(None)
                continue
            f = as_matrix(f)
            if f.shape != (size, size):
                raise ValueError(f"factor shape {f.shape} != ({size}, {size})")
            f = f.copy()
            f.flags.writeable = False
            checked.append(f)
        object.__setattr__(self, "factors", tuple(checked))


def space_of(ps: list[Partition]) -> MultiIndexSpace:
    return MultiIndexSpace(tuple(p.n for p in ps))


def lifted_identity(space: MultiIndexSpace) -> LiftedOperator:
    return LiftedOperator(space, (None,) * space.d)


def _lifted_single(alpha: int, ps: list[Partition], build) -> LiftedOperator:
    space = space_of(ps)
    if not 1 <= alpha <= space.d:
        raise ValueError(f"dimension index {alpha} out of range 1..{space.d}")
    factors = [None] * space.d
    factors[alpha - 1] = build(ps[alpha - 1])
    return LiftedOperator(space, tuple(factors))


def lifted_diff(alpha: int, ps: list[Partition]) -> LiftedOperator:
    """Differentiation along dimension ``alpha`` (1-based), identity elsewhere."""
    return _lifted_single(alpha, ps, diff_matrix)


def lifted_mult(alpha: int, ps: list[Partition]) -> LiftedOperator:
    """Multiplication by the coordinate of dimension ``alpha``, identity elsewhere."""
    return _lifted_single(alpha, ps, mult_matrix)


def realize(op: LiftedOperator) -> np.ndarray:
    """N x N matrix of a lifted operator: kron of the factors in reversed order."""
    out = np.array([[1.0]])
    for size, f in zip(reversed(op.space.sizes), reversed(op.factors)):
        out = np.kron(out, np.eye(size) if f is None else f)
    return out


def lifted_compose(a: LiftedOperator, b: LiftedOperator) -> LiftedOperator:
    """Factor-wise product; realizes to realize(a) @ realize(b)."""
    if a.space != b.space:
        raise ValueError(f"space mismatch: {a.space.dims} vs {b.space.dims}")
    factors = []
    for fa, fb in zip(a.factors, b.factors):
        if fa is None:
            factors.append(fb)
        elif fb is None:
            factors.append(fa)
        else:
            factors.append(fa @ fb)
    return LiftedOperator(a.space, tuple(factors))


def grid_eval(f, ps: list[Partition]) -> np.ndarray:
    """Vector of f at all grid nodes, in star order (dimension 1 fastest)."""
    space = space_of(ps)
    out = np.empty(space.total)
    for k in range(space.total):
        index = unstar(k + 1, space)
        out[k] = f(*(p.nodes[i] for p, i in zip(ps, index)))
    return out


def poly_operator_matrix(terms, ps: list[Partition]) -> np.ndarray:
    """Realized matrix of a polynomial in the d lifted differentiation operators.

    ``terms`` is a list of ``(coefficient, exponents)`` pairs, ``exponents``
    giving the per-dimension derivative orders of one monomial.
    """
    space = space_of(ps)
    zs = [diff_matrix(p) for p in ps]
    out = np.zeros((space.total, space.total))
    for coeff, exponents in terms:
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != space.d:
            raise ValueError(f"exponent vector {exponents} has wrong length")
        factors = tuple(
            None if e == 0 else np.linalg.matrix_power(z, e)
            for z, e in zip(zs, exponents)
        )
        out += coeff * realize(LiftedOperator(space, factors))
    return out


def full_rank_predicate(terms, ps: list[Partition]) -> bool:
    """Whether the realized polynomial operator has full rank.

    True exactly when the constant term is nonzero: the lifted
    differentiation matrices commute and are nilpotent, so every monomial of
    positive degree is nilpotent and the constant term alone decides
    invertibility.  ``poly_operator_matrix`` plus :func:`numerical_rank`
    gives the desk-scale numerical cross-check.
    """
    constant = sum(coeff for coeff, exponents in terms
                   if all(int(e) == 0 for e in exponents))
    return constant != 0.0


def realized_rank(terms, ps: list[Partition], rel_tol: float = 1e-8) -> int:
    """Numerical rank of the realized polynomial operator (cross-check helper)."""
    return numerical_rank(poly_operator_matrix(terms, ps), rel_tol)
