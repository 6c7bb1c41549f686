"""Partitions of an interval and Lagrange interpolation on them.

A partition is a strictly increasing node set x_0 < x_1 < ... < x_n.  The
basis polynomial attached to node k is

    l_k(x) = prod_{m != k} (x - x_m) / pi_k,   pi_k = prod_{m != k} (x_k - x_m),

evaluated by the direct product formula with precomputed pi-weights.  Points
outside [x_0, x_n] are allowed: the basis functions are global polynomials,
so evaluation there is extrapolation, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Partition",
    "uniform_partition",
    "jittered_partition",
    "pi_weights",
    "lagrange_eval",
    "lagrange_basis_row",
    "interpolate_1d",
    "tensor_interpolate",
    "read_partition",
    "write_partition",
]


@dataclass(frozen=True)
class Partition:
    """Strictly increasing nodes x_0 .. x_n on the interval [x_0, x_n]."""

    nodes: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float).copy()
        if nodes.ndim != 1 or nodes.size < 2:
            raise ValueError("a partition needs at least two nodes")
        if not np.all(np.isfinite(nodes)):
            raise ValueError("partition nodes must be finite")
        if not np.all(np.diff(nodes) > 0):
            raise ValueError("partition nodes must be strictly increasing")
        nodes.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)

    @property
    def a(self) -> float:
        return float(self.nodes[0])

    @property
    def b(self) -> float:
        return float(self.nodes[-1])

    @property
    def n(self) -> int:
        """Number of subintervals (one less than the node count)."""
        return self.nodes.size - 1


def uniform_partition(a: float, b: float, n: int) -> Partition:
    """Equally spaced partition x_i = a + (i/n)(b - a) with exact endpoints."""
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Partition(np.linspace(a, b, n + 1))


def jittered_partition(rng: np.random.Generator, n: int, a: float = 0.0,
                       b: float = 1.0, max_shift: float = 0.3) -> Partition:
    """Random partition: equispaced grid with interior nodes shifted by up to
    ``max_shift`` of the spacing.

    Bounded shifts keep adjacent gaps within a factor of a few of each other,
    so pi-weight ratios stay moderate and rank thresholds remain decisive in
    float64.  (Sorting i.i.d. uniform draws instead produces occasional node
    clusters whose differentiation matrices defeat any fixed tolerance.)
    """
    if not 0.0 <= max_shift < 0.5:
        raise ValueError("max_shift must lie in [0, 0.5)")
    h = (b - a) / n
    nodes = a + h * np.arange(n + 1, dtype=float)
    nodes[1:-1] += h * rng.uniform(-max_shift, max_shift, size=max(n - 1, 0))
    nodes[-1] = b
    return Partition(nodes)


def pi_weights(p: Partition) -> np.ndarray:
    """Weights pi_k = prod_{m != k} (x_k - x_m), computed by direct product."""
    x = p.nodes
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    return diff.prod(axis=1)


def lagrange_eval(p: Partition, k: int, x: float) -> float:
    """Value of the basis polynomial l_k at x."""
    if not 0 <= k <= p.n:
        raise ValueError(f"basis index {k} out of range 0..{p.n}")
    nodes = p.nodes
    others = np.delete(nodes, k)
    return float(np.prod(x - others) / np.prod(nodes[k] - others))


def lagrange_basis_row(p: Partition, x: float) -> np.ndarray:
    """All basis values (l_0(x), ..., l_n(x)) at once."""
    nodes = p.nodes
    diffs = x - nodes
    hit = np.flatnonzero(diffs == 0.0)
    if hit.size:  # x is a node: the row is exactly a unit vector
        row = np.zeros(nodes.size)
        row[hit[0]] = 1.0
        return row
    full = np.prod(diffs)
    return full / (diffs * pi_weights(p))


def interpolate_1d(p: Partition, values, x: float) -> float:
    """Evaluate the interpolant of the nodal values at x."""
    values = np.asarray(values, dtype=float)
    if values.shape != (p.n + 1,):
        raise ValueError(f"expected {p.n + 1} values, got shape {values.shape}")
    return float(lagrange_basis_row(p, x) @ values)


def tensor_interpolate(ps: list[Partition], values, point) -> float:
    """Evaluate the tensor-product interpolant at a d-dimensional point.

    ``values`` is ordered with the dimension-1 index varying fastest, matching
    the grid linearization used throughout (see :mod:`liealg.lifting`).
    """
    point = np.asarray(point, dtype=float)
    if point.shape != (len(ps),):
        raise ValueError(f"expected a point of dimension {len(ps)}, got shape {point.shape}")
    values = np.asarray(values, dtype=float)
    total = np.prod([p.n + 1 for p in ps])
    if values.shape != (total,):
        raise ValueError(f"expected {total} grid values, got shape {values.shape}")
    weights = np.array([1.0])
    # dimension 1 fastest == last kron factor
    for p, x in zip(reversed(ps), reversed(point)):
        weights = np.kron(weights, lagrange_basis_row(p, float(x)))
    return float(weights @ values)


def write_partition(path, p: Partition) -> None:
    """One node per line, full precision."""
    with open(path, "w") as fh:
        for x in p.nodes:
            fh.write(f"{x:.17g}\n")


def read_partition(path) -> Partition:
    with open(path) as fh:
        nodes = [float(line) for line in fh if line.strip()]
    return Partition(np.array(nodes))
