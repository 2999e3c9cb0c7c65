import numpy as np
import pytest

from bgcheb.core import BetaGamma


def lagrange_direct(nodes, i, x):
    """l_i(x) as the plain product over j != i (no barycentric form)."""
    nodes = np.asarray(nodes, dtype=float)
    x = np.asarray(x, dtype=float)
    out = np.ones_like(x)
    for j, xj in enumerate(nodes):
        if j != i:
            out = out * (x - xj) / (nodes[i] - xj)
    return out


def lebesgue_direct(nodes, x):
    return sum(np.abs(lagrange_direct(nodes, i, x)) for i in range(len(nodes)))


def brute_force_lebesgue(nodes, lo=-1.0, hi=1.0, samples=1_000_000, chunk=50_000):
    """Max of the product-form Lebesgue function on a uniform grid."""
    grid = np.linspace(lo, hi, samples)
    best_v, best_x = -np.inf, None
    for start in range(0, samples, chunk):
        part = grid[start:start + chunk]
        vals = lebesgue_direct(nodes, part)
        k = int(np.argmax(vals))
        if vals[k] > best_v:
            best_v, best_x = float(vals[k]), float(part[k])
    return best_v, best_x


def classical_cl_points(count):
    m = count - 1
    return np.cos(np.arange(count) * np.pi / m)


SWEEP = [BetaGamma(b, g) for b in (0.0, 0.25, 0.5, 0.75, 0.95) for g in (0.0, 0.25, 0.5, 0.75, 0.95)]
SAMPLE_PARAMS = [
    BetaGamma(0.0, 0.0),
    BetaGamma(0.3, 0.4),
    BetaGamma(1.0, 0.1),
    BetaGamma(0.5, 0.2),
    BetaGamma(0.9, 0.9),
    BetaGamma(1.7, 0.2),
]


@pytest.fixture(params=SAMPLE_PARAMS, ids=lambda p: f"b{p.beta}-g{p.gamma}")
def params(request):
    return request.param
