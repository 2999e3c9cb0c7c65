"""
Node families built on the (beta, gamma) setting.

Every node set is stored strictly decreasing, in the order produced by
``cos(angle_j)`` with ``j`` ascending.
"""

from __future__ import annotations

import enum
import math
import operator
from dataclasses import dataclass, field

import numpy as np

from .core import BetaGamma, check_degree, clamp_unit, make_params
from .errors import DomainError


class NodeKind(str, enum.Enum):
    BG_ZEROS = "bg-zeros"
    BG_CL = "bg-cl"
    EQUISPACED = "equispaced"
    TRIMMED_CL = "trimmed-cl"


@dataclass(frozen=True)
class NodeSet:
    """Ordered abscissae together with how they were produced."""

    points: np.ndarray
    kind: NodeKind
    params: BetaGamma
    trim: "TrimSpec | None" = field(default=None, compare=False)

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 1 or pts.size == 0:
            raise DomainError("a node set needs a non-empty 1-d array of points")
        if np.any(np.abs(pts) > 1):
            raise DomainError("nodes must lie in [-1, 1]")
        if np.any(np.diff(pts) >= 0):
            raise DomainError("nodes must be strictly decreasing")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.size

    def __iter__(self):
        return iter(self.points.tolist())

    @property
    def n(self) -> int:
        return self.points.size


@dataclass(frozen=True)
class TrimSpec:
    """How many classical Lobatto points to drop at the left (kappa1) and right (kappa2)."""

    kappa1: int
    kappa2: int

    def __post_init__(self):
        k1, k2 = operator.index(self.kappa1), operator.index(self.kappa2)
        if k1 < 0 or k2 < 0 or k1 + k2 < 1:
            raise DomainError(
                f"need kappa1, kappa2 >= 0 and kappa1 + kappa2 >= 1, got ({k1}, {k2})"
            )

    @property
    def total(self) -> int:
        return self.kappa1 + self.kappa2


def _in_omega(p: BetaGamma, pts: np.ndarray) -> np.ndarray:
    # analytic values lie in Omega; clip the last-ulp excursions
    return np.clip(pts, p.omega_lo, p.omega_hi)


def bg_chebyshev_zeros(p: BetaGamma, n) -> NodeSet:
    """The ``n`` zeros of ``T_n`` inside the orthogonality interval."""
    n = check_degree(n, minimum=1)
    j = np.arange(1, n + 1)
    angles = (2 - p.beta - p.gamma) * (2 * j - 1) * np.pi / (4 * n) + p.gamma * np.pi / 2
    return NodeSet(_in_omega(p, np.cos(angles)), NodeKind.BG_ZEROS, p)


def bg_cl_points(p: BetaGamma, count) -> NodeSet:
    """``count`` Lobatto-type points, from ``cos(gamma*pi/2)`` down to ``-cos(beta*pi/2)``.

    With ``count = n + 1`` these are the zeros of :func:`bgcheb.core.eval_cl_function`
    for degree ``n``.
    """
    count = check_degree(count, minimum=2)
    n = count - 1
    j = np.arange(count)
    angles = (2 - p.beta - p.gamma) * j * np.pi / (2 * n) + p.gamma * np.pi / 2
    return NodeSet(_in_omega(p, np.cos(angles)), NodeKind.BG_CL, p)


def classical_cl(count) -> NodeSet:
    """Classical Chebyshev-Lobatto points ``cos(j*pi/(count-1))``."""
    return bg_cl_points(BetaGamma(0.0, 0.0), count)


def equispaced(p: BetaGamma, n) -> NodeSet:
    """``n`` equally spaced points from ``1 - gamma`` down to ``beta - 1``."""
    n = check_degree(n, minimum=2)
    j = np.arange(n)
    pts = 1 - p.gamma - (2 - p.beta - p.gamma) * j / (n - 1)
    return NodeSet(pts, NodeKind.EQUISPACED, p)


def kte_map(alpha, x):
    """Kosloff/Tal-Ezer map ``sin(alpha*pi*x/2) / sin(alpha*pi/2)``."""
    alpha = float(alpha)
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    x = clamp_unit(x)
    out = np.sin(alpha * np.pi * x / 2) / math.sin(alpha * np.pi / 2)
    return out[()] if out.ndim == 0 else out


def subset_params(n, trim: TrimSpec) -> BetaGamma:
    """Parameters ``(2 k1 / (n + k1 + k2), 2 k2 / (n + k1 + k2))``.

    ``n`` is the degree: ``bg_cl_points(subset_params(n, trim), n + 1)`` is the
    classical Lobatto set with ``n + k1 + k2 + 1`` points minus its ``k2``
    largest and ``k1`` smallest members.
    """
    n = check_degree(n, minimum=1)
    m = n + trim.total
    return make_params(2 * trim.kappa1 / m, 2 * trim.kappa2 / m)


def trimmed_cl(count, trim: TrimSpec) -> NodeSet:
    """``count`` classical Lobatto points left after trimming ``trim`` from both ends.

    ``trimmed_cl(n, TrimSpec(1, 0))`` drops ``-1`` from the ``n + 1`` point set;
    ``trimmed_cl(n, TrimSpec(1, 1))`` drops both ``-1`` and ``1`` from ``n + 2``.
    """
    count = check_degree(count, minimum=2)
    p = subset_params(count - 1, trim)
    base = bg_cl_points(p, count)
    return NodeSet(base.points, NodeKind.TRIMMED_CL, p, trim=trim)


def zeros_as_cl(p: BetaGamma, n) -> tuple[BetaGamma, NodeSet]:
    """Write the zeros of ``T_n`` as ``n`` Lobatto-type points with shifted parameters.

    Needs ``n >= 2``: at ``n = 1`` the shifted pair sums to exactly 2.
    """
    n = check_degree(n, minimum=2)
    shift = (2 - p.beta - p.gamma) / (2 * n)
    q = make_params(p.beta + shift, p.gamma + shift)
    return q, bg_cl_points(q, n)
