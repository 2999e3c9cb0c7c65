"""
Normalized and associated functions and the continued fraction

    lambda_1 / (T_1 - lambda_2 / (T_1 - lambda_3 / (T_1 - ...)))

whose partial denominators are the normalized functions ``2**(1-n) T_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import BetaGamma, check_degree, clamp_unit, eval_closed, first
from .errors import DomainError


@dataclass(frozen=True)
class LambdaSeq:
    """Partial numerators: free ``lambda1``, then 1/2, then 1/4 forever."""

    lambda1: float = 1.0

    def __post_init__(self):
        if self.lambda1 == 0:
            raise DomainError("lambda1 must be nonzero")

    def __getitem__(self, n: int) -> float:
        if n < 1:
            raise IndexError(f"lambda_n is defined for n >= 1, got {n}")
        if n == 1:
            return self.lambda1
        return 0.5 if n == 2 else 0.25


@dataclass(frozen=True)
class CFState:
    """Partial numerator ``A`` and denominator ``B`` after ``index`` steps."""

    A: np.ndarray | float
    B: np.ndarray | float
    index: int

    @property
    def value(self):
        """The partial fraction ``A / B`` (inf/nan where ``B`` vanishes)."""
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.divide(self.A, self.B)


def _scalar_or_array(v: np.ndarray):
    return v[()] if v.ndim == 0 else v


def normalized(p: BetaGamma, n, x):
    """``2**(1-n) T_n(x)`` for ``n >= 1`` and ``1`` for ``n = 0``.

    The scaling formula would give 2 at ``n = 0``; the recurrence base is 1 and
    is what the partial denominators reproduce, so that is used.
    """
    n = check_degree(n)
    if n == 0:
        return _scalar_or_array(np.ones_like(clamp_unit(x)))
    return 2.0 ** (1 - n) * eval_closed(p, n, x)


def cf_convergent(p: BetaGamma, n, x, lambdas: LambdaSeq = LambdaSeq()) -> CFState:
    """Run both partial numerator/denominator recurrences up to index ``n``."""
    n = check_degree(n)
    t1 = np.asarray(first(p, x), dtype=float)
    # index -1 and 0
    a_prev, a = np.ones_like(t1), np.zeros_like(t1)
    b_prev, b = np.zeros_like(t1), np.ones_like(t1)
    for k in range(1, n + 1):
        lam = lambdas[k]
        b_prev, b = b, t1 * b - lam * b_prev
        if k == 1:
            a_prev, a = a, np.full_like(t1, lambdas.lambda1)
        else:
            a_prev, a = a, t1 * a - lam * a_prev
    return CFState(_scalar_or_array(a), _scalar_or_array(b), n)


def associated(p: BetaGamma, n, x, lambdas: LambdaSeq = LambdaSeq()):
    """Associated functions from ``P_k = T_1 P_{k-1} - lambda_{k+1} P_{k-2}``.

    ``P_{-1} = 0`` and ``P_0 = 1``; equals ``A_{n+1} / lambda1``.
    """
    if n != -1:
        n = check_degree(n)
    t1 = np.asarray(first(p, x), dtype=float)
    prev, cur = np.zeros_like(t1), np.ones_like(t1)
    if n == -1:
        return _scalar_or_array(prev)
    for k in range(1, n + 1):
        prev, cur = cur, t1 * cur - lambdas[k + 1] * prev
    return _scalar_or_array(cur)


def casoratian(p: BetaGamma, n, x):
    """``That_{n+1} P_{n-1} - That_n P_n`` from closed-form ``That`` and recurrence ``P``."""
    n = check_degree(n, minimum=1)
    return (
        normalized(p, n + 1, x) * associated(p, n - 1, x)
        - normalized(p, n, x) * associated(p, n, x)
    )


def casoratian_constant(n, lambdas: LambdaSeq = LambdaSeq()) -> float:
    """The value the Casoratian takes for every ``x``: ``-lambda_2 ... lambda_{n+1}``.

    With the fixed partial numerators this is ``-(1/2) (1/4)**(n-1)``.
    """
    n = check_degree(n, minimum=1)
    out = -1.0
    for k in range(2, n + 2):
        out *= lambdas[k]
    return out
