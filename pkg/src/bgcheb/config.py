"""Default tolerances and sweep sizes for the verification suites.

The CLI exposes every field of :class:`Tolerances` as ``--tol-<name>``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .core import BetaGamma


@dataclass(frozen=True)
class Tolerances:
    orthogonality: float = 1e-10
    recurrence: float = 1e-10
    contfrac: float = 1e-11
    associated: float = 1e-12
    casoratian: float = 1e-12
    genfun: float = 1e-13  # slack on top of the geometric tail bound
    cd: float = 1e-10  # relative to 1 + |ratio form|
    sl: float = 1e-7  # per unit n**2
    nodes: float = 1e-14
    zeros: float = 1e-12
    lebesgue: float = 1e-9  # relative
    endpoint: float = 1e-10  # relative

    @classmethod
    def names(cls) -> list[str]:
        return [f.name for f in fields(cls)]


DEFAULT_TOLERANCES = Tolerances()

#: beta and gamma values crossed into the 5 x 5 parameter sweep
SWEEP_VALUES = (0.0, 0.25, 0.5, 0.75, 0.95)


def parameter_sweep(values=SWEEP_VALUES) -> list[BetaGamma]:
    return [BetaGamma(b, g) for b in values for g in values]


#: parameter pairs used for the orthogonality check
GRAM_PARAMS = (
    BetaGamma(0.0, 0.0),
    BetaGamma(0.3, 0.4),
    BetaGamma(1.0, 0.1),
    BetaGamma(0.9, 0.9),
)

#: default largest degree (or node count) per suite
DEFAULT_N_MAX = {
    "orthogonality": 20,
    "recurrence": 50,
    "contfrac": 40,
    "casoratian": 12,
    "genfun": 200,
    "cd": 30,
    "sl": 30,
    "nodes-identities": 50,
    "lebesgue-theorem": 25,
}

X_GRID_SIZE = 1000
CD_PAIRS = 1000
CD_SEPARATION = 1e-3
GENFUN_U = (-0.9, -0.5, -0.1, 0.1, 0.5, 0.9)
LAMBDA1_VALUES = (0.1, 1.0, 10.0)
KAPPA_MAX = 5
SL_MARGIN = 1e-3
