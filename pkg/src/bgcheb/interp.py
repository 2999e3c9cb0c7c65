"""
Barycentric Lagrange interpolation, Lebesgue functions and Lebesgue constants.

Basis functions are evaluated with the second barycentric form

    l_i(x) = (w_i / (x - x_i)) / sum_j (w_j / (x - x_j)),

with the weights rescaled to ``max |w_i| = 1`` (the form is invariant under a
common factor, and the raw weights grow like ``2**n / n`` on Lobatto nodes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import check_degree
from .errors import DegenerateNodesError, DomainError, MissingValuesError, SingularityError
from .nodes import NodeSet

NODE_TOL = 1e-14
HIT_TOL = 1e-15
TRIG_SINGULAR = 1e-10
GOLDEN_XTOL = 1e-12
#: maxima closer than this (relative) count as ties
TIE_RTOL = 1e-12
_INVPHI = (math.sqrt(5) - 1) / 2


def barycentric_weights(nodes) -> np.ndarray:
    """Weights ``prod_{j != i} 1 / (x_i - x_j)``, normalized to unit max modulus.

    Accumulated in log space so that large node counts cannot overflow.
    """
    x = np.asarray(nodes.points if isinstance(nodes, NodeSet) else nodes, dtype=float)
    if x.size == 1:
        return np.ones(1)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    if np.min(np.abs(diff)) < NODE_TOL:
        raise DegenerateNodesError(f"two nodes coincide within {NODE_TOL:g}")
    log_mag = -np.sum(np.log(np.abs(diff)), axis=1)
    sign = np.prod(np.sign(diff), axis=1)
    return sign * np.exp(log_mag - np.max(log_mag))


@dataclass(frozen=True)
class Interpolant:
    nodes: NodeSet
    bary_weights: np.ndarray
    values: np.ndarray | None = None

    @classmethod
    def from_nodes(cls, nodes: NodeSet, values=None) -> "Interpolant":
        w = barycentric_weights(nodes)
        w.setflags(write=False)
        if values is not None:
            values = np.array(values, dtype=float)
            if values.shape != (len(nodes),):
                raise DomainError(f"expected {len(nodes)} ordinates, got shape {values.shape}")
            values.setflags(write=False)
        return cls(nodes, w, values)

    @property
    def points(self) -> np.ndarray:
        return self.nodes.points

    def __len__(self) -> int:
        return len(self.nodes)


def _as_interp(interp) -> Interpolant:
    return interp if isinstance(interp, Interpolant) else Interpolant.from_nodes(interp)


def basis_matrix(interp: Interpolant, x) -> np.ndarray:
    """All basis values: shape ``x.shape + (n_nodes,)``.

    Rows for ``x`` within ``HIT_TOL`` of a node are the exact cardinal vector.
    """
    interp = _as_interp(interp)
    x = np.asarray(x, dtype=float)
    flat = x.reshape(-1)
    diff = flat[:, None] - interp.points[None, :]
    hit = np.abs(diff) <= HIT_TOL
    on_node = hit.any(axis=1)
    diff[hit] = 1.0
    terms = interp.bary_weights / diff
    out = terms / terms.sum(axis=1, keepdims=True)
    if on_node.any():
        rows = np.flatnonzero(on_node)
        out[rows] = 0.0
        out[rows, np.argmax(hit[rows], axis=1)] = 1.0
    return out.reshape(x.shape + (len(interp),))


def lagrange_basis(interp: Interpolant, i: int, x):
    """The ``i``-th Lagrange cardinal function at ``x``."""
    interp = _as_interp(interp)
    if not 0 <= i < len(interp):
        raise DomainError(f"basis index {i} out of range for {len(interp)} nodes")
    out = basis_matrix(interp, x)[..., i]
    return out[()] if out.ndim == 0 else out


def lebesgue_function(interp: Interpolant, x):
    """``sum_i |l_i(x)|``."""
    out = np.abs(basis_matrix(interp, x)).sum(axis=-1)
    return out[()] if out.ndim == 0 else out


def interpolate(interp: Interpolant, x):
    """Evaluate the interpolant through the stored ordinates."""
    if interp.values is None:
        raise MissingValuesError("interpolant has no ordinates")
    out = basis_matrix(interp, x) @ interp.values
    return out[()] if out.ndim == 0 else out


def trig_lagrange_cl(n, i: int, theta):
    """Cardinal function ``i`` of the ``n + 1`` classical Lobatto nodes at ``x = cos(theta)``.

    ``(-1)**i / (2n) * delta_i * sin(n theta) * (cot((theta + theta_i)/2) + cot((theta - theta_i)/2))``
    with ``theta_i = i pi / n`` and ``delta_i`` halved at ``i = 0, n``.
    """
    n = check_degree(n, minimum=1)
    if not 0 <= i <= n:
        raise DomainError(f"basis index {i} out of range for {n + 1} nodes")
    theta = np.asarray(theta, dtype=float)
    if np.any(theta < 0) or np.any(theta > np.pi):
        raise DomainError("theta must lie in [0, pi]")
    theta_i = i * np.pi / n
    if np.any(np.abs(theta - theta_i) < TRIG_SINGULAR):
        raise SingularityError("the trigonometric form is singular at theta = theta_i")
    delta = 0.5 if i in (0, n) else 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        cot_sum = 1 / np.tan((theta + theta_i) / 2) + 1 / np.tan((theta - theta_i) / 2)
    # (theta + theta_i)/2 = pi/2 gives tan = 1.6e16, cot ~ 0: harmless
    out = (-1) ** i / (2 * n) * delta * np.sin(n * theta) * cot_sum
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class LebesgueReport:
    constant: float
    argmax: float
    n_samples: int
    refined: bool


def _better(v_new, x_new, v_old, x_old) -> bool:
    # ties go to the smaller abscissa
    tie = abs(v_new - v_old) <= TIE_RTOL * max(abs(v_new), abs(v_old))
    if tie:
        return x_new < x_old
    return v_new > v_old


def _golden_max(f, lo: np.ndarray, hi: np.ndarray, xtol: float):
    """Vectorized golden-section search for the maximum of ``f`` on each ``[lo, hi]``."""
    a, b = lo.copy(), hi.copy()
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while np.max(b - a) > xtol:
        left = fc >= fd
        # keep [a, d] where f(c) >= f(d), else [c, b]
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        c_new = np.where(left, b - _INVPHI * (b - a), d)
        d_new = np.where(left, c, a + _INVPHI * (b - a))
        fc_new = np.where(left, np.nan, fd)
        fd_new = np.where(left, fc, np.nan)
        need_c, need_d = np.isnan(fc_new), np.isnan(fd_new)
        if need_c.any():
            fc_new[need_c] = f(c_new[need_c])
        if need_d.any():
            fd_new[need_d] = f(d_new[need_d])
        c, d, fc, fd = c_new, d_new, fc_new, fd_new
    xm = 0.5 * (a + b)
    cand = np.stack([a, xm, b])
    vals = f(cand.ravel()).reshape(cand.shape)
    best = np.argmax(vals, axis=0)
    cols = np.arange(a.size)
    return cand[best, cols], vals[best, cols]


def lebesgue_constant(interp, interval=(-1.0, 1.0), grid_per_gap: int = 32) -> LebesgueReport:
    """Maximize the Lebesgue function over ``interval``.

    The interval is split at every node inside it. Each piece gets
    ``grid_per_gap`` Chebyshev-distributed interior samples, plus both of its
    ends; the best bracket of every piece is then refined by golden-section
    search to ``GOLDEN_XTOL``.
    """
    interp = _as_interp(interp)
    lo, hi = (float(v) for v in interval)
    if not lo < hi:
        raise DomainError(f"interval must satisfy lo < hi, got ({lo}, {hi})")
    if grid_per_gap < 8:
        raise DomainError("grid_per_gap must be >= 8")

    inside = interp.points[(interp.points > lo) & (interp.points < hi)]
    breaks = np.concatenate(([lo], np.sort(inside), [hi]))
    k = np.arange(1, grid_per_gap + 1)
    frac = (1 - np.cos(k * np.pi / (grid_per_gap + 1))) / 2
    left, right = breaks[:-1], breaks[1:]
    # samples[g] = [left_g, interior..., right_g]
    samples = np.concatenate(
        (left[:, None], left[:, None] + (right - left)[:, None] * frac[None, :], right[:, None]),
        axis=1,
    )
    values = lebesgue_function(interp, samples)
    n_samples = breaks.size + left.size * grid_per_gap

    def f(x):
        return lebesgue_function(interp, x)

    idx = np.argmax(values, axis=1)
    gaps = np.arange(left.size)
    lo_b = samples[gaps, np.maximum(idx - 1, 0)]
    hi_b = samples[gaps, np.minimum(idx + 1, samples.shape[1] - 1)]
    ref_x, ref_v = _golden_max(f, lo_b, hi_b, GOLDEN_XTOL)

    best_v, best_x, refined = -np.inf, np.inf, False
    for g in gaps:
        # sampled candidates first, in ascending abscissa order
        for x_s, v_s in zip(samples[g], values[g]):
            if _better(v_s, x_s, best_v, best_x):
                best_v, best_x, refined = float(v_s), float(x_s), False
        if _better(ref_v[g], ref_x[g], best_v, best_x):
            best_v, best_x, refined = float(ref_v[g]), float(ref_x[g]), True
    return LebesgueReport(best_v, best_x, int(n_samples), refined)

