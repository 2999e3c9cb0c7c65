import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import chebyshev as npcheb

from bgcheb.core import (
    BetaGamma,
    derivative,
    eval_cl_function,
    eval_closed,
    eval_recurrence,
    make_params,
    second_derivative,
)
from bgcheb.errors import DomainError, SingularityError
from bgcheb.nodes import bg_chebyshev_zeros, bg_cl_points


@st.composite
def admissible(draw, max_sum=1.9):
    # as beta + gamma -> 2 the phase factor blows up and so does rounding
    beta = draw(st.floats(0, max_sum))
    gamma = draw(st.floats(0, max_sum - beta))
    return BetaGamma(beta, gamma)


class TestMakeParams:
    def test_classical(self):
        p = make_params(0, 0)
        assert p.omega == (-1.0, 1.0)

    def test_fig1_left_interval(self):
        p = make_params(1, 0.1)
        assert p.omega_lo == pytest.approx(0.0, abs=1e-16)
        assert p.omega_hi == math.cos(0.05 * math.pi)

    @pytest.mark.parametrize(
        "beta, gamma",
        [(1.5, 0.6), (-0.1, 0.0), (0.0, -1e-9), (2.0, 0.0), (0.0, 2.0), (1.0, 1.0), (float("nan"), 0)],
    )
    def test_inadmissible(self, beta, gamma):
        with pytest.raises(DomainError):
            make_params(beta, gamma)

    def test_error_names_constraint(self):
        with pytest.raises(DomainError, match="beta \\+ gamma < 2"):
            make_params(2.5, 0)


class TestEvalClosed:
    def test_classical_t3(self):
        assert eval_closed(BetaGamma(0, 0), 3, 0.5) == pytest.approx(-1.0, abs=1e-15)

    def test_degree_zero(self, params):
        np.testing.assert_array_equal(eval_closed(params, 0, np.linspace(-1, 1, 11)), 1.0)

    def test_zero_at_fig1_nodes(self):
        p = BetaGamma(1, 0.1)
        zeros = bg_chebyshev_zeros(p, 5).points
        assert np.max(np.abs(eval_closed(p, 5, zeros))) < 1e-13

    def test_matches_monomial_chebyshev(self):
        x = np.linspace(-1, 1, 301)
        for n in range(11):
            ref = npcheb.chebval(x, [0] * n + [1])
            np.testing.assert_allclose(eval_closed(BetaGamma(0, 0), n, x), ref, atol=1e-12, rtol=0)

    def test_clamps_rounding(self):
        p = BetaGamma(0.3, 0.4)
        assert eval_closed(p, 4, 1 + 5e-13) == eval_closed(p, 4, 1.0)

    @pytest.mark.parametrize("x", [1 + 1e-9, -1.5, np.nan])
    def test_outside_unit_interval(self, x):
        with pytest.raises(DomainError):
            eval_closed(BetaGamma(0, 0), 2, x)

    def test_negative_degree(self):
        with pytest.raises(DomainError):
            eval_closed(BetaGamma(0, 0), -1, 0.0)

    @settings(max_examples=200, deadline=None)
    @given(admissible(max_sum=1.999), st.integers(0, 60), st.floats(-1, 1))
    def test_bounded(self, p, n, x):
        assert abs(eval_closed(p, n, x)) <= 1.0

    @settings(max_examples=200, deadline=None)
    @given(admissible(), st.integers(0, 40), st.floats(-1, 1))
    def test_beta_gamma_symmetry(self, p, n, x):
        lhs = eval_closed(p, n, x)
        rhs = (-1) ** n * eval_closed(p.swapped(), n, -x)
        assert abs(lhs - rhs) < 1e-12


class TestRecurrence:
    def test_classical_t2(self):
        assert eval_recurrence(BetaGamma(0, 0), 2, 0.3) == pytest.approx(-0.82, abs=1e-15)

    def test_cross_check_point(self):
        p = BetaGamma(0.3, 0.4)
        assert abs(eval_recurrence(p, 4, 0.2) - eval_closed(p, 4, 0.2)) < 1e-14

    def test_agrees_with_closed_form(self, params):
        x = np.linspace(*params.omega, 1000)
        for n in range(51):
            diff = np.abs(eval_recurrence(params, n, x) - eval_closed(params, n, x))
            assert diff.max() < 1e-10, n

    def test_large_degree_is_iterative(self):
        # would overflow the stack if recursive
        p = BetaGamma(0.2, 0.1)
        assert abs(eval_recurrence(p, 5000, 0.3) - eval_closed(p, 5000, 0.3)) < 1e-8


def _fd1(p, n, x, h):
    return (eval_closed(p, n, x + h) - eval_closed(p, n, x - h)) / (2 * h)


def _fd2(p, n, x, h):
    return (eval_closed(p, n, x + h) - 2 * eval_closed(p, n, x) + eval_closed(p, n, x - h)) / h**2


class TestDerivatives:
    def test_degree_zero(self, params):
        x = np.linspace(-0.9, 0.9, 7)
        np.testing.assert_array_equal(derivative(params, 0, x), 0.0)
        np.testing.assert_array_equal(second_derivative(params, 0, x), 0.0)

    def test_classical_values(self):
        assert derivative(BetaGamma(0, 0), 1, 0.5) == pytest.approx(1.0, abs=1e-15)
        assert second_derivative(BetaGamma(0, 0), 2, 0.3) == pytest.approx(4.0, abs=1e-13)

    def test_first_derivative_fd_point(self):
        p = BetaGamma(0.3, 0.4)
        assert abs(derivative(p, 3, 0.1) - _fd1(p, 3, 0.1, 1e-6)) < 1e-6

    def test_second_derivative_fd_point(self):
        p = BetaGamma(0.5, 0.2)
        assert abs(second_derivative(p, 4, 0.25) - _fd2(p, 4, 0.25, 1e-4)) < 1e-4

    # the O(h^2) difference error scales like (n * scale)**3, so keep the frequency moderate
    @pytest.mark.parametrize("p", [BetaGamma(0, 0), BetaGamma(0.3, 0.4), BetaGamma(0.5, 0.2), BetaGamma(1, 0.1)])
    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_first_derivative_fd_grid(self, p, n):
        x = np.linspace(-0.99, 0.99, 199)
        err = np.abs(derivative(p, n, x) - _fd1(p, n, x, 1e-6))
        assert err.max() < 1e-6

    @pytest.mark.parametrize("x", [1.0, -1.0, 1 - 1e-13])
    def test_singular_at_endpoints(self, x):
        with pytest.raises(SingularityError):
            derivative(BetaGamma(0.3, 0.4), 3, x)
        with pytest.raises(SingularityError):
            second_derivative(BetaGamma(0.3, 0.4), 3, x)


class TestClFunction:
    def test_vanishes_at_endpoints(self, params):
        assert eval_cl_function(params, 4, 1.0) == 0.0
        assert eval_cl_function(params, 4, -1.0) == 0.0

    def test_classical_midpoint(self):
        assert abs(eval_cl_function(BetaGamma(0, 0), 2, 0.0)) < 1e-15

    @pytest.mark.parametrize("n", [1, 3, 10, 50])
    def test_vanishes_at_lobatto_points(self, params, n):
        pts = bg_cl_points(params, n + 1).points
        assert np.max(np.abs(eval_cl_function(params, n, pts))) < 1e-12

    def test_matches_derivative_form(self, params):
        n = 6
        x = np.linspace(-0.95, 0.95, 41)
        ref = (2 - params.beta - params.gamma) / (2 * n) * (1 - x**2) * derivative(params, n, x)
        np.testing.assert_allclose(eval_cl_function(params, n, x), ref, atol=1e-13)

    def test_degree_zero_rejected(self):
        with pytest.raises(DomainError):
            eval_cl_function(BetaGamma(0, 0), 0, 0.5)
