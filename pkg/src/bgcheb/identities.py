"""
Analytic identities, each in a closed form and an assembled form so one can
be checked against the other:

* generating function ``sum_n T_n(x) u**n``;
* Christoffel-Darboux kernel (primed sum vs. ratio of consecutive terms);
* Sturm-Liouville residual of ``T_n``.
"""

from __future__ import annotations

import numpy as np

from .core import (
    BetaGamma,
    check_degree,
    clamp_unit,
    derivative,
    eval_closed,
    first,
    second_derivative,
)
from .errors import DomainError, NearSingularError, SingularityError

SL_INTERIOR = 1e-6
DEFAULT_SINGULAR_THRESHOLD = 1e-8


def _check_u(u) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if np.any(~(np.abs(u) < 1)):
        raise DomainError("the generating function needs |u| < 1")
    return u


def _out(v):
    v = np.asarray(v)
    return v[()] if v.ndim == 0 else v


def genfun_closed(p: BetaGamma, u, x):
    """``(1 - u T_1(x)) / (1 + u^2 - 2 u T_1(x))``."""
    u = _check_u(u)
    t1 = first(p, x)
    return _out((1 - u * t1) / (1 + u * u - 2 * u * t1))


def genfun_partial(p: BetaGamma, u, x, N):
    """Truncated series ``sum_{n=0}^{N} T_n(x) u**n``."""
    u = _check_u(u)
    N = check_degree(N)
    total = np.zeros(np.broadcast(u, np.asarray(x, dtype=float)).shape)
    power = np.ones_like(total)
    for n in range(N + 1):
        total = total + eval_closed(p, n, x) * power
        power = power * u
    return _out(total)


def genfun_tail_bound(u, N) -> float:
    """Upper bound ``|u|**(N+1) / (1 - |u|)`` on the truncation error."""
    a = float(abs(u))
    if not a < 1:
        raise DomainError("the generating function needs |u| < 1")
    return a ** (N + 1) / (1 - a)


def cd_lhs(p: BetaGamma, n, x, y):
    """Primed kernel sum ``T_0(x)T_0(y)/2 + sum_{j=1}^{n} T_j(x) T_j(y)``."""
    n = check_degree(n)
    total = 0.5 * np.ones(np.broadcast(np.asarray(x, float), np.asarray(y, float)).shape)
    for j in range(1, n + 1):
        total = total + eval_closed(p, j, x) * eval_closed(p, j, y)
    return _out(total)


def cd_rhs(p: BetaGamma, n, x, y, singular_threshold: float = DEFAULT_SINGULAR_THRESHOLD):
    """Ratio form ``(T_{n+1}(x)T_n(y) - T_n(x)T_{n+1}(y)) / (2 (T_1(x) - T_1(y)))``.

    Raises :class:`NearSingularError` when ``|T_1(x) - T_1(y)|`` falls below
    ``singular_threshold``; use :func:`cd_lhs` there.
    """
    n = check_degree(n)
    denom = np.asarray(first(p, x) - first(p, y))
    if np.any(np.abs(denom) <= singular_threshold):
        raise NearSingularError(
            f"|T_1(x) - T_1(y)| <= {singular_threshold:g}; the ratio form is unreliable"
        )
    num = eval_closed(p, n + 1, x) * eval_closed(p, n, y) - eval_closed(p, n, x) * eval_closed(
        p, n + 1, y
    )
    return _out(0.5 * num / denom)


def sl_coefficient(p: BetaGamma, n) -> float:
    """Eigenvalue ``4 n^2 / (2 - beta - gamma)^2``."""
    n = check_degree(n)
    return (n * p.scale) ** 2


def sl_residual(p: BetaGamma, n, x):
    """Left side of ``(sqrt(1-x^2) y')' + c_n y / sqrt(1-x^2) = 0`` at ``y = T_n``.

    Expanded as ``-x y'/sqrt(1-x^2) + sqrt(1-x^2) y'' + c_n y / sqrt(1-x^2)``.
    """
    n = check_degree(n)
    x = clamp_unit(x)
    if np.any(np.abs(x) > 1 - SL_INTERIOR):
        raise SingularityError(f"the residual is only evaluated for |x| <= 1 - {SL_INTERIOR:g}")
    root = np.sqrt(1 - x * x)
    d1 = derivative(p, n, x)
    d2 = second_derivative(p, n, x)
    return _out(-x * d1 / root + root * d2 + sl_coefficient(p, n) * eval_closed(p, n, x) / root)
