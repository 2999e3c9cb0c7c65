"""
(beta, gamma)-Chebyshev functions of the first kind.

For admissible parameters ``0 <= beta, gamma < 2`` with ``beta + gamma < 2``,

    T_n(x) = cos(n * phi(x)),   phi(x) = 2 / (2 - beta - gamma) * (arccos(x) - gamma*pi/2),

which reduces to the classical Chebyshev polynomial when ``beta = gamma = 0``.
The functions are orthogonal on ``[-cos(beta*pi/2), cos(gamma*pi/2)]`` but are
evaluated here on the whole of ``[-1, 1]``.

All evaluators accept a scalar or an array for ``x`` and broadcast.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError

#: inputs with ``|x| - 1`` in ``(0, CLAMP_TOL]`` are snapped onto +-1
CLAMP_TOL = 1e-12
#: derivatives refuse ``|x| >= 1 - SINGULAR_BAND``
SINGULAR_BAND = 1e-12


@dataclass(frozen=True)
class BetaGamma:
    """Validated parameter pair.

    Attributes
    ----------
    beta, gamma : float
        Trimming parameters at the left and right end of ``[-1, 1]``.
    """

    beta: float
    gamma: float

    def __post_init__(self):
        b, g = self.beta, self.gamma
        if not (math.isfinite(b) and math.isfinite(g)):
            raise DomainError(f"beta and gamma must be finite, got ({b}, {g})")
        if b < 0 or g < 0 or b >= 2 or g >= 2 or b + g >= 2:
            raise DomainError(
                "admissibility requires 0 <= beta < 2, 0 <= gamma < 2 and "
                f"beta + gamma < 2, got beta={b!r}, gamma={g!r}"
            )

    @property
    def scale(self) -> float:
        """Frequency factor 2 / (2 - beta - gamma)."""
        return 2.0 / (2.0 - self.beta - self.gamma)

    @property
    def omega_lo(self) -> float:
        return -math.cos(self.beta * math.pi / 2)

    @property
    def omega_hi(self) -> float:
        return math.cos(self.gamma * math.pi / 2)

    @property
    def omega(self) -> tuple[float, float]:
        """Orthogonality interval as ``(lo, hi)``."""
        return self.omega_lo, self.omega_hi

    def swapped(self) -> "BetaGamma":
        return BetaGamma(self.gamma, self.beta)


def make_params(beta, gamma) -> BetaGamma:
    """Build a :class:`BetaGamma`, raising :class:`DomainError` if inadmissible."""
    return BetaGamma(float(beta), float(gamma))


def check_degree(n, minimum: int = 0) -> int:
    try:
        n = operator.index(n)
    except TypeError:
        raise DomainError(f"degree must be an integer, got {n!r}") from None
    if n < minimum:
        raise DomainError(f"degree must be >= {minimum}, got {n}")
    return n


def _result(values: np.ndarray):
    # 0-d arrays come back as numpy scalars
    return values[()] if values.ndim == 0 else values


def clamp_unit(x) -> np.ndarray:
    """Return ``x`` as a float array with near-endpoint rounding removed."""
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1 + CLAMP_TOL) or np.any(np.isnan(x)):
        raise DomainError("x must lie in [-1, 1]")
    return np.clip(x, -1.0, 1.0)


def shifted_angle(p: BetaGamma, x) -> np.ndarray:
    """``arccos(x) - gamma*pi/2``."""
    return np.arccos(clamp_unit(x)) - p.gamma * np.pi / 2


def phase(p: BetaGamma, x) -> np.ndarray:
    """The angle ``phi(x)`` with ``T_n(x) = cos(n * phi(x))``."""
    return p.scale * shifted_angle(p, x)


def eval_closed(p: BetaGamma, n, x):
    """Evaluate ``T_n`` from its cosine definition."""
    n = check_degree(n)
    return _result(np.cos(n * phase(p, x)))


def first(p: BetaGamma, x):
    """``T_1``, the function that replaces ``x`` in the three-term recurrence."""
    return eval_closed(p, 1, x)


def eval_recurrence(p: BetaGamma, n, x):
    """Evaluate ``T_n`` by ``T_{k+1} = 2 T_1 T_k - T_{k-1}``.

    Iterative, O(n) work and O(1) extra arrays.
    """
    n = check_degree(n)
    t1 = np.cos(phase(p, x))
    prev, cur = np.ones_like(t1), t1
    if n == 0:
        return _result(prev)
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * t1 * cur - prev
    return _result(cur)


def _interior(x) -> np.ndarray:
    x = clamp_unit(x)
    if np.any(np.abs(x) >= 1 - SINGULAR_BAND):
        raise SingularityError("derivatives of T_n are singular at x = -1 and x = 1")
    return x


def derivative(p: BetaGamma, n, x):
    """First derivative ``k sin(k theta) / sqrt(1 - x^2)`` with ``k = n * scale``."""
    n = check_degree(n)
    x = _interior(x)
    k = n * p.scale
    theta = shifted_angle(p, x)
    return _result(k * np.sin(k * theta) / np.sqrt(1 - x * x))


def second_derivative(p: BetaGamma, n, x):
    """Second derivative, the two-term expression from the chain rule in theta."""
    n = check_degree(n)
    x = _interior(x)
    k = n * p.scale
    theta = shifted_angle(p, x)
    one_m = 1 - x * x
    return _result(
        -k * k * np.cos(k * theta) / one_m
        + k * np.sin(k * theta) * x / (one_m * np.sqrt(one_m))
    )


def eval_cl_function(p: BetaGamma, n, x):
    """The function whose zeros are the n+1 (beta, gamma)-Lobatto points.

    Equals ``(2 - beta - gamma) / (2n) * (1 - x^2) * T_n'(x)``; written as
    ``sqrt(1 - x^2) * sin(n * phi(x))`` so it is finite at +-1.
    """
    n = check_degree(n, minimum=1)
    x = clamp_unit(x)
    return _result(np.sqrt(1 - x * x) * np.sin(n * phase(p, x)))
