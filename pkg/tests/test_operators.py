import numpy as np
import pytest

from liealg.linalg import numerical_rank
from liealg.operators import (
    OperatorPoly1D,
    apply_operator_poly,
    diff_matrix,
    differentiate_values,
    mult_matrix,
)
from liealg.partitions import Partition, jittered_partition, lagrange_eval, pi_weights

P01 = Partition(np.array([0.0, 1.0]))
P012 = Partition(np.array([0.0, 1.0, 2.0]))

Z01 = np.array([[-1.0, 1.0], [-1.0, 1.0]])
Z012 = np.array([[-1.5, 2.0, -0.5], [-0.5, 0.0, 0.5], [0.5, -2.0, 1.5]])


class TestDiffMatrix:
    def test_two_nodes(self):
        np.testing.assert_allclose(diff_matrix(P01), Z01, atol=1e-15)

    def test_three_nodes(self):
        np.testing.assert_allclose(diff_matrix(P012), Z012, atol=1e-15)

    def test_rows_annihilate_constants(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            p = jittered_partition(rng, int(rng.integers(1, 13)))
            z = diff_matrix(p)
            scale = np.abs(z).sum(axis=1).max()
            assert np.abs(z.sum(axis=1)).max() <= 1e-13 * scale

    def test_exact_derivatives_of_low_degree_polynomials(self):
        rng = np.random.default_rng(4)
        for _ in range(40):
            n = int(rng.integers(1, 13))
            p = jittered_partition(rng, n)
            z = diff_matrix(p)
            coeffs = rng.uniform(-1, 1, n + 1)
            poly = np.polynomial.Polynomial(coeffs)
            expected = poly.deriv()(p.nodes)
            got = z @ poly(p.nodes)
            scale = max(np.abs(expected).max(), 1.0)
            assert np.abs(got - expected).max() <= 1e-10 * scale

    def test_nilpotent_at_power_n_plus_one(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = int(rng.integers(1, 13))
            z = diff_matrix(jittered_partition(rng, n))
            power = np.linalg.matrix_power(z, n + 1)
            norm_z = np.abs(z).sum(axis=1).max()
            assert np.abs(power).sum(axis=1).max() <= 1e-8 * norm_z ** (n + 1)

    def test_rank_ladder(self):
        for p in (P01, P012, Partition(np.arange(4.0)), jittered_partition(np.random.default_rng(6), 6)):
            n = p.n
            z = diff_matrix(p)
            power = np.eye(n + 1)
            for k in range(n + 1):
                assert numerical_rank(power) == n + 1 - k
                power = power @ z
            # the (n+1)-th power is zero only up to round-off; judge by norm decay
            norm_z = np.abs(z).sum(axis=1).max()
            assert np.abs(power).sum(axis=1).max() <= 1e-8 * norm_z ** (n + 1)

    def test_columns_interpolate_basis_derivatives(self):
        # independent oracle: differentiate l_k by the product rule and compare
        # with the interpolant sum_j Z[j,k] l_j(x)
        rng = np.random.default_rng(7)
        p = jittered_partition(rng, 5)
        z = diff_matrix(p)
        pi = pi_weights(p)
        nodes = p.nodes

        def basis_derivative(k, x):
            others = np.delete(nodes, k)
            total = 0.0
            for m in range(others.size):
                total += np.prod(x - np.delete(others, m))
            return total / pi[k]

        for x in rng.uniform(0.0, 1.0, 50):
            for k in range(p.n + 1):
                via_matrix = sum(z[j, k] * lagrange_eval(p, j, x) for j in range(p.n + 1))
                assert abs(basis_derivative(k, x) - via_matrix) <= 1e-10


class TestMultMatrix:
    def test_diagonal_of_nodes(self):
        np.testing.assert_array_equal(mult_matrix(P012), np.diag([0.0, 1.0, 2.0]))
        np.testing.assert_array_equal(
            mult_matrix(Partition(np.array([-1.0, 1.0]))), np.diag([-1.0, 1.0]))

    def test_acts_on_ones_as_nodes(self):
        p = Partition(np.array([0.3, 1.7, 2.2]))
        np.testing.assert_array_equal(mult_matrix(p) @ np.ones(3), p.nodes)


class TestOperatorPoly:
    def test_validation(self):
        with pytest.raises(ValueError, match="at least one term"):
            OperatorPoly1D(())
        with pytest.raises(ValueError, match="distinct"):
            OperatorPoly1D((((1.0,), 1), ((2.0,), 1)))
        with pytest.raises(ValueError, match="zero"):
            OperatorPoly1D((((0.0, 0.0), 0),))
        with pytest.raises(ValueError, match="non-negative"):
            OperatorPoly1D((((1.0,), -1),))

    def test_second_derivative_plus_identity(self):
        op = OperatorPoly1D((((1.0,), 2), ((1.0,), 0)))
        for p in (P012, jittered_partition(np.random.default_rng(8), 5)):
            z = diff_matrix(p)
            np.testing.assert_allclose(
                apply_operator_poly(op, p), z @ z + np.eye(p.n + 1), rtol=1e-14, atol=1e-14)

    def test_single_derivative_term(self):
        op = OperatorPoly1D((((1.0,), 1),))
        np.testing.assert_allclose(apply_operator_poly(op, P01), Z01, atol=1e-15)

    def test_coordinate_coefficient_reduces_to_mult_matrix(self):
        op = OperatorPoly1D((((0.0, 1.0), 0),))
        np.testing.assert_array_equal(apply_operator_poly(op, P012), mult_matrix(P012))


class TestDifferentiateValues:
    def test_square_on_three_nodes(self):
        np.testing.assert_array_equal(
            differentiate_values(P012, np.array([0.0, 1.0, 4.0])), [0.0, 2.0, 4.0])

    def test_constants_map_to_zero(self):
        p = jittered_partition(np.random.default_rng(9), 7)
        got = differentiate_values(p, np.full(8, 3.5))
        assert np.abs(got).max() <= 1e-10

    def test_identity_map_to_ones(self):
        p = jittered_partition(np.random.default_rng(10), 9)
        np.testing.assert_allclose(differentiate_values(p, p.nodes), np.ones(10), atol=1e-11)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="values"):
            differentiate_values(P01, [1.0, 2.0, 3.0])
