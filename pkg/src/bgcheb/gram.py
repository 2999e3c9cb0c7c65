"""Weighted inner products on the orthogonality interval."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from .core import BetaGamma, SINGULAR_BAND, check_degree, clamp_unit
from .errors import DomainError, SingularityError


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Gauss-Legendre rule: ``panels`` equal panels of ``points_per_panel`` nodes."""

    panels: int
    points_per_panel: int = 16

    def __post_init__(self):
        if self.panels < 1 or self.points_per_panel < 2:
            raise DomainError("need panels >= 1 and points_per_panel >= 2")

    @classmethod
    def default(cls, max_degree: int) -> "QuadratureSpec":
        return cls(panels=max(8, max_degree), points_per_panel=16)


@lru_cache(maxsize=32)
def _reference_rule(m: int):
    return leggauss(m)


def composite_rule(a: float, b: float, q: QuadratureSpec) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the composite rule on ``[a, b]``."""
    ref_x, ref_w = _reference_rule(q.points_per_panel)
    edges = np.linspace(a, b, q.panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * ref_x[None, :]).ravel()
    weights = (half[:, None] * ref_w[None, :]).ravel()
    return nodes, weights


def weight(p: BetaGamma, x):
    """Orthogonality weight ``2 / ((2 - beta - gamma) sqrt(1 - x^2))``."""
    x = clamp_unit(x)
    if np.any(np.abs(x) >= 1 - SINGULAR_BAND):
        raise SingularityError("the weight is singular at x = -1 and x = 1")
    out = p.scale / np.sqrt(1 - x * x)
    return out[()] if out.ndim == 0 else out


def _angle_rule(p: BetaGamma, q: QuadratureSpec):
    # x = cos t maps Omega onto [gamma*pi/2, pi - beta*pi/2]; w(x) dx = scale dt
    a = p.gamma * np.pi / 2
    b = np.pi - p.beta * np.pi / 2
    t, wt = composite_rule(a, b, q)
    psi = p.scale * (t - a)
    return psi, p.scale * wt


def inner_product(p: BetaGamma, r, s, q: QuadratureSpec | None = None) -> float:
    """Weighted integral of ``T_r T_s`` over the orthogonality interval."""
    r, s = check_degree(r), check_degree(s)
    if q is None:
        q = QuadratureSpec.default(max(r, s))
    psi, wt = _angle_rule(p, q)
    return float(np.sum(np.cos(r * psi) * np.cos(s * psi) * wt))


@dataclass(frozen=True)
class GramTable:
    """Pairwise inner products for degrees ``0..max_degree``."""

    params: BetaGamma
    max_degree: int
    matrix: np.ndarray

    def __getitem__(self, rs):
        return float(self.matrix[rs])

    def entries(self):
        """Yield ``(r, s, value)`` for ``r <= s`` in lexicographic order."""
        for r in range(self.max_degree + 1):
            for s in range(r, self.max_degree + 1):
                yield r, s, float(self.matrix[r, s])

    @staticmethod
    def expected(r: int, s: int) -> float:
        if r != s:
            return 0.0
        return np.pi if r == 0 else np.pi / 2


def gram_table(p: BetaGamma, max_degree, q: QuadratureSpec | None = None) -> GramTable:
    max_degree = check_degree(max_degree)
    if q is None:
        q = QuadratureSpec.default(max_degree)
    psi, wt = _angle_rule(p, q)
    basis = np.cos(np.outer(np.arange(max_degree + 1), psi))
    full = (basis * wt) @ basis.T
    # keep the upper triangle as computed and mirror it
    upper = np.triu(full)
    matrix = upper + np.triu(full, 1).T
    matrix.setflags(write=False)
    return GramTable(p, max_degree, matrix)
