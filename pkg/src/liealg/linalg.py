"""Dense real matrix arithmetic: products, Kronecker products, pivoted LU, numerical rank."""

from __future__ import annotations

import numpy as np

__all__ = [
    "SingularSystemError",
    "as_matrix",
    "mat_mul",
    "kron",
    "lu_factor",
    "lu_solve",
    "numerical_rank",
    "format_matrix",
    "write_matrix",
]


class SingularSystemError(RuntimeError):
    """Raised when LU elimination meets a pivot column with no usable pivot.

    Carries ``pivot_index``, the elimination step at which the breakdown
    occurred.  Near-singular but formally invertible systems do not raise;
    they are solved and flagged through the reciprocal condition estimate.
    """

    def __init__(self, pivot_index: int, message: str | None = None):
        self.pivot_index = pivot_index
        super().__init__(message or f"singular system: no usable pivot at step {pivot_index}")


def as_matrix(a) -> np.ndarray:
    """Validate and return ``a`` as a 2-D float array with finite entries."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_vector(a) -> np.ndarray:
    m = np.asarray(a, dtype=float)
    if m.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("vector entries must be finite")
    return m


def mat_mul(a, b) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product in the standard block form.

    Entry at block (i, j), offset (k, l) equals ``a[i, j] * b[k, l]``;
    the second factor's index varies fastest.
    """
    return np.kron(as_matrix(a), as_matrix(b))


def lu_factor(a, pivot_tol: float = 0.0):
    """LU factorization with partial pivoting, packed in a single array.

    Returns ``(lu, piv)`` where ``piv`` is the row permutation applied to the
    input.  Raises :class:`SingularSystemError` when the magnitude of the best
    available pivot does not exceed ``pivot_tol * max|a|``.
    """
    lu = as_matrix(a).copy()
    n, m = lu.shape
    if n != m:
        raise ValueError(f"square matrix required, got shape {lu.shape}")
    threshold = pivot_tol * np.abs(lu).max()
    piv = np.arange(n)
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) <= threshold:
            raise SingularSystemError(k)
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            piv[[k, p]] = piv[[p, k]]
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, piv


def _lu_apply(lu: np.ndarray, piv: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve with packed factors; ``b`` may be a vector or a matrix of columns."""
    x = b[piv].astype(float, copy=True)
    n = lu.shape[0]
    for k in range(1, n):
        x[k] -= lu[k, :k] @ x[:k]
    for k in range(n - 1, -1, -1):
        x[k] -= lu[k, k + 1:] @ x[k + 1:]
        x[k] /= lu[k, k]
    return x


def lu_solve(a, b, pivot_tol: float = 0.0):
    """Solve ``a x = b`` by partially pivoted LU.

    Returns ``(x, rcond)`` where ``rcond = 1 / (norm_inf(a) * norm_inf(a^-1))``
    is computed from the factors; it is the caller's signal for
    ill-conditioning, which is deliberately not an error here.
    """
    a = as_matrix(a)
    b = as_vector(b)
    if b.shape[0] != a.shape[0]:
        raise ValueError(f"right-hand side length {b.shape[0]} != matrix dimension {a.shape[0]}")
    lu, piv = lu_factor(a, pivot_tol)
    x = _lu_apply(lu, piv, b)
    inv = _lu_apply(lu, piv, np.eye(a.shape[0]))
    norm_a = np.abs(a).sum(axis=1).max()
    norm_inv = np.abs(inv).sum(axis=1).max()
    rcond = 0.0 if norm_inv == 0.0 else 1.0 / (norm_a * norm_inv)
    return x, rcond


def numerical_rank(a, rel_tol: float = 1e-8) -> int:
    """Number of singular values exceeding ``rel_tol * sigma_max``.

    The zero matrix has rank 0.  ``rel_tol`` must lie in (0, 1).
    """
    if not 0.0 < rel_tol < 1.0:
        raise ValueError(f"rel_tol must lie in (0, 1), got {rel_tol}")
    s = np.linalg.svd(as_matrix(a), compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > rel_tol * s[0]))


def format_matrix(a) -> str:
    """Text dump: one row per line, entries space-separated, 17 significant digits."""
    a = as_matrix(a)
    return "\n".join(" ".join(f"{v:.16e}" for v in row) for row in a)


def write_matrix(path, a) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(a) + "\n")
