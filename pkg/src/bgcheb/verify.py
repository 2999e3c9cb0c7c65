"""
Verification suites: each one sweeps parameters, measures the worst residual
of an identity and compares it with a tolerance from :mod:`bgcheb.config`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import config
from .config import Tolerances
from .contfrac import LambdaSeq, associated, casoratian, casoratian_constant, cf_convergent, normalized
from .core import BetaGamma, eval_closed, eval_cl_function, eval_recurrence, first
from .gram import gram_table
from .identities import cd_lhs, cd_rhs, genfun_closed, genfun_partial, genfun_tail_bound, sl_residual
from .interp import Interpolant, lebesgue_constant, lebesgue_function
from .nodes import (
    TrimSpec,
    bg_chebyshev_zeros,
    bg_cl_points,
    classical_cl,
    equispaced,
    kte_map,
    subset_params,
    trimmed_cl,
    zeros_as_cl,
)


@dataclass(frozen=True)
class Check:
    identity: str
    params: str
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.max_residual) and self.max_residual <= self.tolerance)


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, identity, params, residual, tolerance):
        self.checks.append(Check(identity, params, float(residual), float(tolerance)))


def _pstr(p: BetaGamma, **extra) -> str:
    parts = [f"beta={p.beta:g}", f"gamma={p.gamma:g}"]
    parts += [f"{k}={v:g}" for k, v in extra.items()]
    return ";".join(parts)


def _grid(lo=-1.0, hi=1.0, size=config.X_GRID_SIZE) -> np.ndarray:
    return np.linspace(lo, hi, size)


def suite_orthogonality(n_max, tol: Tolerances, **_) -> VerificationReport:
    rep = VerificationReport("orthogonality")
    for p in config.GRAM_PARAMS:
        g = gram_table(p, n_max).matrix
        expected = np.diag([np.pi] + [np.pi / 2] * n_max)
        err = np.abs(g - expected)
        off = err[~np.eye(n_max + 1, dtype=bool)]
        rep.add("gram-offdiagonal", _pstr(p, max_degree=n_max), off.max() if off.size else 0.0, tol.orthogonality)
        rep.add("gram-diagonal", _pstr(p, max_degree=n_max), np.diag(err).max(), tol.orthogonality)
    return rep


def suite_recurrence(n_max, tol: Tolerances, **_) -> VerificationReport:
    rep = VerificationReport("recurrence")
    x = _grid()
    for p in config.parameter_sweep():
        worst = max(np.max(np.abs(eval_recurrence(p, n, x) - eval_closed(p, n, x))) for n in range(n_max + 1))
        rep.add("recurrence-vs-closed", _pstr(p, n_max=n_max), worst, tol.recurrence)
    return rep


def suite_contfrac(n_max, tol: Tolerances, **_) -> VerificationReport:
    rep = VerificationReport("contfrac")
    x = _grid(size=200)
    for p in config.parameter_sweep():
        worst_b = max(
            np.max(np.abs(cf_convergent(p, n, x).B - normalized(p, n, x))) for n in range(n_max + 1)
        )
        rep.add("denominator-is-normalized", _pstr(p, n_max=n_max), worst_b, tol.contfrac)
        worst_a = 0.0
        for lam1 in config.LAMBDA1_VALUES:
            seq = LambdaSeq(lam1)
            for n in range(n_max):
                a = cf_convergent(p, n + 1, x, seq).A / lam1
                worst_a = max(worst_a, np.max(np.abs(a - associated(p, n, x))))
        rep.add("associated-lambda1-independent", _pstr(p, n_max=n_max), worst_a, tol.associated)
    return rep


def suite_casoratian(n_max, tol: Tolerances, **_) -> VerificationReport:
    rep = VerificationReport("casoratian")
    x = _grid(size=200)
    sweep = config.parameter_sweep()
    for n in range(1, n_max + 1):
        target = casoratian_constant(n)
        vals = np.array([casoratian(p, n, x) for p in sweep])
        rep.add("casoratian-value", f"n={n};target={target:.17g}", np.max(np.abs(vals - target)), tol.casoratian)
        spread = np.max(vals.max(axis=1) - vals.min(axis=1))
        rep.add("casoratian-constant-in-x", f"n={n}", spread, tol.casoratian)
    return rep


def suite_genfun(n_max, tol: Tolerances, **_) -> VerificationReport:
    rep = VerificationReport("genfun")
    x = _grid(size=101)
    for p in config.parameter_sweep():
        for u in config.GENFUN_U:
            diff = np.max(np.abs(genfun_partial(p, u, x, n_max) - genfun_closed(p, u, x)))
            bound = genfun_tail_bound(u, n_max)
            rep.add("genfun-tail-bound", _pstr(p, u=u, N=n_max), diff, bound + tol.genfun)
    return rep


def _separated_pairs(p: BetaGamma, count: int, rng: np.random.Generator):
    lo, hi = p.omega
    xs, ys = [], []
    while sum(len(v) for v in xs) < count:
        x = rng.uniform(lo, hi, count)
        y = rng.uniform(lo, hi, count)
        keep = np.abs(first(p, x) - first(p, y)) > config.CD_SEPARATION
        xs.append(x[keep])
        ys.append(y[keep])
    return np.concatenate(xs)[:count], np.concatenate(ys)[:count]


def suite_cd(n_max, tol: Tolerances, seed: int = 0, **_) -> VerificationReport:
    rep = VerificationReport("cd")
    rng = np.random.default_rng(seed)
    for p in config.parameter_sweep():
        x, y = _separated_pairs(p, config.CD_PAIRS, rng)
        worst = 0.0
        for n in range(n_max + 1):
            rhs = cd_rhs(p, n, x, y)
            worst = max(worst, np.max(np.abs(cd_lhs(p, n, x, y) - rhs) / (1 + np.abs(rhs))))
        rep.add("christoffel-darboux", _pstr(p, n_max=n_max, pairs=x.size), worst, tol.cd)
    return rep


def suite_sl(n_max, tol: Tolerances, **_) -> VerificationReport:
    rep = VerificationReport("sl")
    x = _grid(-1 + config.SL_MARGIN, 1 - config.SL_MARGIN)
    for p in config.parameter_sweep():
        worst = max(np.max(np.abs(sl_residual(p, n, x))) / n**2 for n in range(1, n_max + 1))
        rep.add("sturm-liouville-residual-per-n2", _pstr(p, n_max=n_max), worst, tol.sl)
    return rep


def suite_nodes(n_max, tol: Tolerances, **_) -> VerificationReport:
    rep = VerificationReport("nodes-identities")
    for p in config.parameter_sweep():
        kte = zac = zres = clres = 0.0
        for n in range(2, n_max + 1):
            kte = max(kte, np.max(np.abs(kte_map(1, equispaced(p, n).points) - bg_cl_points(p, n).points)))
            _, shifted = zeros_as_cl(p, n)
            zeros = bg_chebyshev_zeros(p, n).points
            zac = max(zac, np.max(np.abs(shifted.points - zeros)))
            zres = max(zres, np.max(np.abs(eval_closed(p, n, zeros))))
            cl = bg_cl_points(p, n + 1).points
            clres = max(clres, np.max(np.abs(eval_cl_function(p, n, cl[1:-1]))))
        rep.add("kte-map-of-equispaced", _pstr(p, n_max=n_max), kte, tol.nodes)
        rep.add("zeros-as-cl", _pstr(p, n_max=n_max), zac, tol.nodes)
        rep.add("zeros-residual", _pstr(p, n_max=n_max), zres, tol.zeros)
        rep.add("cl-function-residual", _pstr(p, n_max=n_max), clres, tol.zeros)
    for k1 in range(config.KAPPA_MAX + 1):
        for k2 in range(config.KAPPA_MAX + 1):
            if k1 + k2 == 0:
                continue
            trim = TrimSpec(k1, k2)
            worst = 0.0
            for n in range(1, n_max + 1):
                got = bg_cl_points(subset_params(n, trim), n + 1).points
                full = classical_cl(n + k1 + k2 + 1).points
                worst = max(worst, np.max(np.abs(got - full[k2:k2 + n + 1])))
            rep.add("cl-subset", f"k1={k1};k2={k2};n_max={n_max}", worst, tol.nodes)
    return rep


def suite_lebesgue(n_max, tol: Tolerances, **_) -> VerificationReport:
    rep = VerificationReport("lebesgue-theorem")
    for n in range(2, n_max + 1):
        left = Interpolant.from_nodes(trimmed_cl(n, TrimSpec(1, 0)))
        target = 2 * n - 1
        r = lebesgue_constant(left, (-1.0, 1.0))
        rep.add("trim-left-constant", f"n={n};target={target}", abs(r.constant - target) / target, tol.lebesgue)
        rep.add("trim-left-argmax", f"n={n};target=-1", abs(r.argmax + 1.0), 0.0)
        at_end = lebesgue_function(left, -1.0)
        rep.add("trim-left-endpoint", f"n={n};target={target}", abs(at_end - target) / target, tol.endpoint)
        both = Interpolant.from_nodes(trimmed_cl(n, TrimSpec(1, 1)))
        r2 = lebesgue_constant(both, (-1.0, 1.0))
        rep.add("trim-both-constant", f"n={n};target={n}", abs(r2.constant - n) / n, tol.lebesgue)
    return rep


SUITES = {
    "orthogonality": suite_orthogonality,
    "recurrence": suite_recurrence,
    "contfrac": suite_contfrac,
    "casoratian": suite_casoratian,
    "genfun": suite_genfun,
    "cd": suite_cd,
    "sl": suite_sl,
    "nodes-identities": suite_nodes,
    "lebesgue-theorem": suite_lebesgue,
}


def run_suite(name: str, n_max: int | None = None, tol: Tolerances = config.DEFAULT_TOLERANCES, seed: int = 0):
    """Run one named suite (or ``"all"``) and return a list of reports."""
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for s in names:
        n = config.DEFAULT_N_MAX[s] if n_max is None else n_max
        reports.append(SUITES[s](n, tol, seed=seed))
    return reports
