import numpy as np
import pytest

from bgcheb.core import BetaGamma, eval_closed
from bgcheb.errors import DegenerateNodesError, DomainError, MissingValuesError, SingularityError
from bgcheb.interp import (
    Interpolant,
    barycentric_weights,
    basis_matrix,
    interpolate,
    lagrange_basis,
    lebesgue_constant,
    lebesgue_function,
    trig_lagrange_cl,
)
from bgcheb.nodes import TrimSpec, bg_chebyshev_zeros, bg_cl_points, classical_cl, trimmed_cl

from conftest import brute_force_lebesgue, lagrange_direct, lebesgue_direct


class TestWeights:
    def test_two_nodes(self):
        np.testing.assert_allclose(barycentric_weights(np.array([1.0, -1.0])), [1.0, -1.0])

    def test_single_node(self):
        np.testing.assert_array_equal(barycentric_weights(np.array([0.3])), [1.0])

    @pytest.mark.parametrize("n", [2, 5, 16, 64])
    def test_classical_lobatto_pattern(self, n):
        w = barycentric_weights(classical_cl(n + 1))
        ref = (-1.0) ** np.arange(n + 1)
        ref[[0, -1]] *= 0.5
        # same up to a common factor
        np.testing.assert_allclose(w / w[1] * ref[1], ref, atol=1e-12)
        assert np.max(np.abs(w)) == 1.0

    def test_matches_direct_products(self):
        x = bg_chebyshev_zeros(BetaGamma(0.3, 0.4), 9).points
        direct = np.array([1 / np.prod([x[i] - x[j] for j in range(9) if j != i]) for i in range(9)])
        direct /= np.max(np.abs(direct))
        np.testing.assert_allclose(barycentric_weights(x), direct, rtol=1e-12)

    def test_large_set_does_not_overflow(self):
        w = barycentric_weights(classical_cl(2001))
        assert np.all(np.isfinite(w)) and np.max(np.abs(w)) == 1.0

    def test_degenerate(self):
        with pytest.raises(DegenerateNodesError):
            barycentric_weights(np.array([0.5, 0.5, -0.5]))


class TestBasis:
    @pytest.mark.parametrize("make", [
        lambda: classical_cl(8),
        lambda: bg_cl_points(BetaGamma(0.3, 0.4), 7),
        lambda: trimmed_cl(6, TrimSpec(1, 1)),
    ])
    def test_cardinal_and_partition(self, make):
        nodes = make()
        interp = Interpolant.from_nodes(nodes)
        np.testing.assert_array_equal(basis_matrix(interp, nodes.points), np.eye(len(nodes)))
        x = np.linspace(-1, 1, 301)
        np.testing.assert_allclose(basis_matrix(interp, x).sum(axis=1), 1.0, atol=1e-13)

    def test_matches_product_form(self):
        nodes = bg_cl_points(BetaGamma(1, 0.1), 6)
        interp = Interpolant.from_nodes(nodes)
        x = np.linspace(-1, 1, 211)
        for i in range(6):
            np.testing.assert_allclose(lagrange_basis(interp, i, x), lagrange_direct(nodes.points, i, x), atol=1e-12)

    @pytest.mark.parametrize("n", [3, 6, 10])
    def test_trig_form(self, n):
        interp = Interpolant.from_nodes(classical_cl(n + 1))
        theta = np.linspace(0.013, np.pi - 0.013, 97)
        theta = theta[np.min(np.abs(theta[:, None] - np.arange(n + 1) * np.pi / n), axis=1) > 1e-6]
        for i in range(n + 1):
            np.testing.assert_allclose(
                trig_lagrange_cl(n, i, theta), lagrange_basis(interp, i, np.cos(theta)), atol=1e-12
            )

    def test_trig_singular(self):
        with pytest.raises(SingularityError):
            trig_lagrange_cl(4, 1, np.pi / 4)
        with pytest.raises(DomainError):
            trig_lagrange_cl(4, 5, 0.3)

    def test_index_range(self):
        with pytest.raises(DomainError):
            lagrange_basis(Interpolant.from_nodes(classical_cl(3)), 3, 0.0)


class TestInterpolate:
    def test_reproduces_low_degree(self):
        nodes = bg_cl_points(BetaGamma(0.3, 0.4), 6)
        x = np.linspace(-1, 1, 51)
        const = Interpolant.from_nodes(nodes, np.full(6, 2.5))
        np.testing.assert_allclose(interpolate(const, x), 2.5, atol=1e-13)
        lin = Interpolant.from_nodes(nodes, 3 * nodes.points - 1)
        np.testing.assert_allclose(interpolate(lin, x), 3 * x - 1, atol=1e-12)

    def test_reproduces_polynomial_of_full_degree(self):
        # classical T_5 through 6 nodes is exact
        p = BetaGamma(0, 0)
        nodes = bg_cl_points(BetaGamma(0.2, 0.1), 6)
        interp = Interpolant.from_nodes(nodes, eval_closed(p, 5, nodes.points))
        x = np.linspace(-1, 1, 401)
        np.testing.assert_allclose(interpolate(interp, x), eval_closed(p, 5, x), atol=1e-11)

    def test_missing_values(self):
        with pytest.raises(MissingValuesError):
            interpolate(Interpolant.from_nodes(classical_cl(4)), 0.1)

    def test_wrong_value_count(self):
        with pytest.raises(DomainError):
            Interpolant.from_nodes(classical_cl(4), [1.0, 2.0])


class TestLebesgue:
    def test_one_at_nodes(self):
        nodes = trimmed_cl(7, TrimSpec(1, 0))
        np.testing.assert_allclose(lebesgue_function(Interpolant.from_nodes(nodes), nodes.points), 1.0)

    def test_matches_product_form(self):
        nodes = bg_cl_points(BetaGamma(0.5, 0.2), 7)
        x = np.linspace(-1, 1, 333)
        np.testing.assert_allclose(
            lebesgue_function(Interpolant.from_nodes(nodes), x), lebesgue_direct(nodes.points, x), rtol=1e-12
        )

    @pytest.mark.parametrize("n", range(2, 16))
    def test_left_trim_endpoint_value(self, n):
        interp = Interpolant.from_nodes(trimmed_cl(n, TrimSpec(1, 0)))
        assert abs(lebesgue_function(interp, -1.0) - (2 * n - 1)) <= 1e-10 * (2 * n - 1)

    @pytest.mark.parametrize("n", range(2, 26))
    def test_trimmed_constants(self, n):
        r = lebesgue_constant(Interpolant.from_nodes(trimmed_cl(n, TrimSpec(1, 0))))
        assert abs(r.constant - (2 * n - 1)) / (2 * n - 1) < 1e-9
        assert r.argmax == -1.0
        r2 = lebesgue_constant(Interpolant.from_nodes(trimmed_cl(n, TrimSpec(1, 1))))
        assert abs(r2.constant - n) / n < 1e-9

    @pytest.mark.parametrize("make", [
        lambda: trimmed_cl(5, TrimSpec(1, 0)),
        lambda: trimmed_cl(6, TrimSpec(1, 1)),
        lambda: bg_chebyshev_zeros(BetaGamma(0.3, 0.4), 6),
        lambda: bg_cl_points(BetaGamma(1, 0.1), 5),
    ])
    def test_against_brute_force(self, make):
        nodes = make()
        r = lebesgue_constant(Interpolant.from_nodes(nodes))
        v, _ = brute_force_lebesgue(nodes.points, samples=200_001)
        # refinement can only improve on a grid
        assert r.constant >= v - 1e-12
        assert abs(r.constant - v) / v < 1e-6

    def test_interior_maximum_is_refined(self):
        nodes = classical_cl(9)
        r = lebesgue_constant(Interpolant.from_nodes(nodes), (-0.9, 0.9))
        v, _ = brute_force_lebesgue(nodes.points, -0.9, 0.9, samples=400_001)
        assert abs(r.constant - v) < 1e-8
        assert r.n_samples > 0

    def test_symmetric_tie_goes_left(self):
        r = lebesgue_constant(Interpolant.from_nodes(classical_cl(7)))
        assert r.argmax < 0

    def test_bad_interval(self):
        interp = Interpolant.from_nodes(classical_cl(4))
        with pytest.raises(DomainError):
            lebesgue_constant(interp, (0.5, 0.5))
        with pytest.raises(DomainError):
            lebesgue_constant(interp, grid_per_gap=4)
