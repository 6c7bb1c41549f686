import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liealg.partitions import (
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


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError, match="increasing"):
            Partition(np.array([0.0, 2.0, 1.0]))
        with pytest.raises(ValueError, match="two nodes"):
            Partition(np.array([1.0]))
        with pytest.raises(ValueError, match="finite"):
            Partition(np.array([0.0, np.inf]))

    def test_endpoints_and_size(self):
        p = Partition(np.array([-1.0, 0.5, 2.0]))
        assert (p.a, p.b, p.n) == (-1.0, 2.0, 2)

    def test_nodes_are_immutable(self):
        p = Partition(np.array([0.0, 1.0]))
        with pytest.raises(ValueError):
            p.nodes[0] = 5.0


class TestUniformPartition:
    def test_two_nodes(self):
        np.testing.assert_array_equal(uniform_partition(0, 1, 1).nodes, [0.0, 1.0])

    def test_three_nodes(self):
        np.testing.assert_array_equal(uniform_partition(-1, 1, 2).nodes, [-1.0, 0.0, 1.0])

    def test_shifted_quarter_pi_grid(self):
        p = uniform_partition(0.001, math.pi / 2, 4)
        step = (math.pi / 2 - 0.001) / 4
        expected = [0.001 + i * step for i in range(5)]
        np.testing.assert_allclose(p.nodes, expected, rtol=1e-15)
        assert p.nodes[-1] == math.pi / 2

    def test_rejects_empty_interval(self):
        with pytest.raises(ValueError, match="a < b"):
            uniform_partition(1.0, 1.0, 3)


@given(n=st.integers(2, 12), seed=st.integers(0, 1000))
@settings(max_examples=40, deadline=None)
def test_jittered_partition_is_valid(n, seed):
    p = jittered_partition(np.random.default_rng(seed), n, a=-2.0, b=3.0)
    assert p.a == -2.0 and p.b == 3.0 and p.n == n
    gaps = np.diff(p.nodes)
    h = 5.0 / n
    assert gaps.min() >= 0.4 * h - 1e-12 and gaps.max() <= 1.6 * h + 1e-12


class TestPiWeights:
    @pytest.mark.parametrize("nodes,expected", [
        ([0.0, 1.0], [-1.0, 1.0]),
        ([0.0, 1.0, 2.0], [2.0, -1.0, 2.0]),
        ([-1.0, 0.0, 1.0], [2.0, -1.0, 2.0]),
    ])
    def test_direct_products(self, nodes, expected):
        np.testing.assert_array_equal(pi_weights(Partition(np.array(nodes))), expected)


class TestLagrangeEval:
    def test_cardinal_property(self):
        p = Partition(np.array([0.0, 1.0, 2.0]))
        for k in range(3):
            for j in range(3):
                expected = 1.0 if j == k else 0.0
                assert lagrange_eval(p, k, p.nodes[j]) == pytest.approx(expected, abs=1e-12)

    def test_midpoint_value(self):
        # l_1(0.5) = 0.5 * (0.5 - 2) / pi_1 = 0.75
        p = Partition(np.array([0.0, 1.0, 2.0]))
        assert lagrange_eval(p, 1, 0.5) == pytest.approx(0.75)

    def test_index_range(self):
        p = Partition(np.array([0.0, 1.0]))
        with pytest.raises(ValueError, match="out of range"):
            lagrange_eval(p, 2, 0.5)

    def test_partition_of_unity_fixed_point(self):
        p = Partition(np.array([0.0, 0.3, 1.1, 2.0]))
        total = sum(lagrange_eval(p, k, 0.37) for k in range(4))
        assert total == pytest.approx(1.0, abs=1e-11)

    @given(st.integers(0, 10_000))
    @settings(max_examples=100, deadline=None)
    def test_partition_of_unity_random_points(self, draw):
        rng = np.random.default_rng(draw)
        p = jittered_partition(rng, int(rng.integers(1, 11)))
        x = rng.uniform(p.a, p.b)
        total = sum(lagrange_eval(p, k, x) for k in range(p.n + 1))
        assert total == pytest.approx(1.0, abs=1e-11)


class TestInterpolate1D:
    def test_reproduces_square(self):
        p = Partition(np.array([0.0, 1.0, 2.0]))
        assert interpolate_1d(p, p.nodes**2, 1.5) == pytest.approx(2.25)

    def test_linear_midpoint(self):
        p = Partition(np.array([0.0, 1.0]))
        assert interpolate_1d(p, [2.0, 1.0], 0.5) == pytest.approx(1.5)

    def test_node_identity_is_exact(self):
        p = Partition(np.array([0.0, 0.7, 1.3, 2.0]))
        values = np.array([4.0, -1.0, 0.5, 9.0])
        for j in range(4):
            assert interpolate_1d(p, values, p.nodes[j]) == values[j]

    def test_length_mismatch(self):
        p = Partition(np.array([0.0, 1.0]))
        with pytest.raises(ValueError, match="values"):
            interpolate_1d(p, [1.0, 2.0, 3.0], 0.5)

    def test_extrapolation_is_allowed(self):
        # the basis functions are global polynomials; outside [a, b] the
        # interpolant simply extrapolates
        p = Partition(np.array([0.0, 1.0]))
        assert interpolate_1d(p, [0.0, 2.0], 3.0) == pytest.approx(6.0)
        assert interpolate_1d(p, [0.0, 2.0], -1.0) == pytest.approx(-2.0)

    def test_polynomial_reproduction(self):
        rng = np.random.default_rng(5)
        for _ in range(60):
            n = int(rng.integers(1, 13))
            p = jittered_partition(rng, n)
            coeffs = rng.uniform(-1, 1, n + 1)
            poly = np.polynomial.Polynomial(coeffs)
            x = rng.uniform(p.a, p.b)
            got = interpolate_1d(p, poly(p.nodes), x)
            assert abs(got - poly(x)) <= 1e-11 * max(1.0, abs(poly(x)))


class TestTensorInterpolate:
    def grid(self):
        return [Partition(np.array([0.0, 1.0])), Partition(np.array([0.0, 1.0]))]

    def test_bilinear(self):
        # f(x, y) = x*y sampled with the dimension-1 index fastest
        values = np.array([0.0, 0.0, 0.0, 1.0])
        assert tensor_interpolate(self.grid(), values, [0.5, 0.5]) == pytest.approx(0.25)

    def test_grid_node_identity(self):
        ps = self.grid()
        values = np.array([3.0, -2.0, 7.0, 0.5])
        assert tensor_interpolate(ps, values, [1.0, 0.0]) == values[1]
        assert tensor_interpolate(ps, values, [0.0, 1.0]) == values[2]

    def test_one_dimension_matches_1d(self):
        p = Partition(np.array([0.0, 0.4, 1.0]))
        values = np.array([1.0, -1.0, 2.0])
        for x in (0.1, 0.7, 0.95):
            assert tensor_interpolate([p], values, [x]) == pytest.approx(
                interpolate_1d(p, values, x))

    def test_length_checks(self):
        ps = self.grid()
        with pytest.raises(ValueError, match="grid values"):
            tensor_interpolate(ps, np.zeros(3), [0.5, 0.5])
        with pytest.raises(ValueError, match="dimension"):
            tensor_interpolate(ps, np.zeros(4), [0.5])


def test_partition_file_round_trip(tmp_path):
    p = Partition(np.array([0.001, 0.3932, math.pi / 2]))
    path = tmp_path / "nodes.txt"
    write_partition(path, p)
    np.testing.assert_array_equal(read_partition(path).nodes, p.nodes)
