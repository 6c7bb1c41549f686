"""Two boundary-value experiments driven by the operator matrices.

1-D problem:  u'' + u = 0 on [0, pi/2], u(0) = 2, u(pi/2) = 1, exact solution
u(x) = sin x + 2 cos x.  A direct collocation matrix of u'' + u is invertible
and therefore cannot see the boundary data, so the unknown is changed to v via

    u = (2 - 2x/pi) * (x (x - pi/2) v + 1),

which satisfies both boundary values identically for any v.  Writing
g = 2 - 2x/pi and h = x(x - pi/2), the transformed equation is

    p v'' + q v' + r v = s,  p = g h,  q = 2(gh)',  r = (gh)'' + gh,  s = -g

(g'' = 0).  The same problem is solved by a shooting baseline: two
second-order finite-difference initial-value marches combined to match the
right boundary value.

2-D problem:  u_xx - u_yy + y u_x = f on the unit disk with u = 0 on the
boundary, exact solution u = sin(1 - x^2 - y^2).  The substitution
u = (1 - x^2 - y^2) v absorbs the boundary condition; collocation runs on a
tensor grid of the enclosing square [-1, 1]^2 and errors are taken over all
grid nodes against the extended exact formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lifting import grid_eval, lifted_diff, lifted_identity, lifted_mult, realize, space_of
from .linalg import lu_solve
from .operators import OperatorPoly1D, apply_operator_poly
from .partitions import Partition, uniform_partition

__all__ = [
    "BvpReport",
    "error_metrics",
    "two_point_coefficients",
    "solve_two_point",
    "shooting_two_point",
    "hyperbolic_rhs",
    "solve_hyperbolic",
    "format_surface",
    "write_surface",
]


@dataclass(frozen=True)
class BvpReport:
    """Solution vectors and error metrics of one experiment run."""

    sizes: tuple[int, ...]
    v_sigma: np.ndarray
    u_sigma: np.ndarray
    error_sum: float
    error_max: float
    error_avg: float
    rcond: float


def error_metrics(approx, exact) -> tuple[float, float, float]:
    """Sum, max, and mean of absolute componentwise differences."""
    approx = np.asarray(approx, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if approx.shape != exact.shape or approx.ndim != 1:
        raise ValueError(f"length mismatch: {approx.shape} vs {exact.shape}")
    err = np.abs(approx - exact)
    return float(err.sum()), float(err.max()), float(err.mean())


def two_point_coefficients(x):
    """Coefficient values (p, q, r, s) of the transformed 1-D equation at x."""
    p = -(2.0 / math.pi) * x**3 + 3.0 * x**2 - math.pi * x
    q = 2.0 * (-(6.0 / math.pi) * x**2 + 6.0 * x - math.pi)
    r = -(12.0 / math.pi) * x + 6.0 + x * (2.0 - (2.0 / math.pi) * x) * (x - math.pi / 2.0)
    s = (2.0 / math.pi) * x - 2.0
    return p, q, r, s


def _exact_two_point(x):
    return np.sin(x) + 2.0 * np.cos(x)


# ascending-power coefficient vectors of p, q, r, s
_P_COEFFS = (0.0, -math.pi, 3.0, -2.0 / math.pi)
_Q_COEFFS = (-2.0 * math.pi, 12.0, -12.0 / math.pi)
_R_COEFFS = (6.0, -12.0 / math.pi - math.pi, 3.0, -2.0 / math.pi)

TWO_POINT_OPERATOR = OperatorPoly1D(((_P_COEFFS, 2), (_Q_COEFFS, 1), (_R_COEFFS, 0)))


def solve_two_point(n: int, include_zero_endpoint: bool = False) -> BvpReport:
    """Collocation solve of the transformed 1-D problem on n subintervals.

    The partition covers [0.001, pi/2] (left endpoint shifted off 0, matching
    the reference results); pass ``include_zero_endpoint=True`` to use
    [0, pi/2] instead.  Both run fine; the flag only exists for comparison.
    """
    if not 2 <= n <= 20:
        raise ValueError(f"n must lie in 2..20, got {n}")
    a = 0.0 if include_zero_endpoint else 0.001
    part = uniform_partition(a, math.pi / 2.0, n)
    x = part.nodes
    matrix = apply_operator_poly(TWO_POINT_OPERATOR, part)
    rhs = two_point_coefficients(x)[3]
    v, rcond = lu_solve(matrix, rhs)
    u = (2.0 - 2.0 * x / math.pi) * (x * (x - math.pi / 2.0) * v + 1.0)
    e_sum, e_max, e_avg = error_metrics(u, _exact_two_point(x))
    return BvpReport((n,), v, u, e_sum, e_max, e_avg, rcond)


def shooting_two_point(n: int) -> BvpReport:
    """Shooting baseline on a uniform n-subinterval grid of [0, pi/2].

    Both initial-value problems y'' = -y (one with y(0)=2, y'(0)=0, one with
    y(0)=0, y'(0)=1) are marched with the second-order central scheme
    y_{i+1} = 2 y_i - y_{i-1} - h^2 y_i, the first step taken from the
    second-order Taylor expansion; the two solutions are then combined to hit
    the right boundary value.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    h = (math.pi / 2.0) / n
    x = np.linspace(0.0, math.pi / 2.0, n + 1)
    w = np.empty(n + 1)
    v = np.empty(n + 1)
    w[0], v[0] = 2.0, 0.0
    w[1] = w[0] - h * h * w[0] / 2.0          # w'(0) = 0
    v[1] = h                                  # v'(0) = 1
    for i in range(1, n):
        w[i + 1] = 2.0 * w[i] - w[i - 1] - h * h * w[i]
        v[i + 1] = 2.0 * v[i] - v[i - 1] - h * h * v[i]
    if abs(v[n]) < 1e-12:
        raise RuntimeError(f"degenerate shooting denominator: v(pi/2) = {v[n]:.3e}")
    u = w + (1.0 - w[n]) / v[n] * v
    e_sum, e_max, e_avg = error_metrics(u, _exact_two_point(x))
    return BvpReport((n,), v, u, e_sum, e_max, e_avg, math.nan)


def hyperbolic_rhs(x, y):
    """Right-hand side of the 2-D problem: matches u = sin(1 - x^2 - y^2)."""
    phi = 1.0 - x * x - y * y
    return 4.0 * (y * y - x * x) * np.sin(phi) - 2.0 * x * y * np.cos(phi)


def _exact_hyperbolic(x, y):
    return np.sin(1.0 - x * x - y * y)


def solve_hyperbolic(n1: int, n2: int) -> BvpReport:
    """Collocation solve of the substituted 2-D problem on an (n1, n2) grid.

    Assembles the lifted operator

        K = (I - X^2 - Y^2)(Dx^2 - Dy^2 + Y Dx) - 4 X Dx + 4 Y Dy - 2 X Y

    on uniform partitions of [-1, 1]^2, solves K v = f at the nodes, and
    reconstructs u = (I - X^2 - Y^2) v.  The full-rank guarantee for pure
    derivative polynomials does not extend to these variable coefficients, so
    the solve reports its condition estimate and fails loudly only on exact
    pivot breakdown.
    """
    if not (4 <= n1 <= 20 and 4 <= n2 <= 20):
        raise ValueError(f"n1, n2 must lie in 4..20, got ({n1}, {n2})")
    ps = [uniform_partition(-1.0, 1.0, n1), uniform_partition(-1.0, 1.0, n2)]
    space = space_of(ps)
    dx = realize(lifted_diff(1, ps))
    dy = realize(lifted_diff(2, ps))
    xm = realize(lifted_mult(1, ps))
    ym = realize(lifted_mult(2, ps))
    eye = realize(lifted_identity(space))
    mask = eye - xm @ xm - ym @ ym
    k = mask @ (dx @ dx - dy @ dy + ym @ dx) - 4.0 * xm @ dx + 4.0 * ym @ dy - 2.0 * xm @ ym
    rhs = grid_eval(hyperbolic_rhs, ps)
    v, rcond = lu_solve(k, rhs)
    u = mask @ v
    exact = grid_eval(_exact_hyperbolic, ps)
    e_sum, e_max, e_avg = error_metrics(u, exact)
    return BvpReport((n1, n2), v, u, e_sum, e_max, e_avg, rcond)


def format_surface(report: BvpReport, ps: list[Partition]) -> str:
    """Gridded ``x y u`` triples, blank line between constant-y blocks."""
    n1, n2 = ps[0].n, ps[1].n
    if report.u_sigma.size != (n1 + 1) * (n2 + 1):
        raise ValueError("report does not match the given partitions")
    blocks = []
    for j in range(n2 + 1):
        rows = []
        for i in range(n1 + 1):
            u = report.u_sigma[j * (n1 + 1) + i]
            rows.append(f"{ps[0].nodes[i]:.16e} {ps[1].nodes[j]:.16e} {u:.16e}")
        blocks.append("\n".join(rows))
    return "\n\n".join(blocks) + "\n"


def write_surface(path, report: BvpReport, ps: list[Partition]) -> None:
    with open(path, "w") as fh:
        fh.write(format_surface(report, ps))
