"""Audits of whether a model maps every finite pure shear stretch
V = diag(lambda, 1/lambda, 1) (up to the pure-shear frame) onto a Cauchy pure
shear stress."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..constitutive.models import INVARIANT_ENERGY, ConstitutiveModel
from ..constitutive.stress import betas
from ..errors import UnsupportedParameterization

DEFAULT_LAMBDA_GRID = (0.5, 0.75, 1.0, 1.5, 2.0, 3.0)
ANALYTIC_TOL = 1e-7
FD_TOL = 1e-5


@dataclass
class ConditionCheck:
    """Residual table of one pair of compatibility conditions.

    ``rows`` holds (lambda, first residual, second residual).
    """

    name: str
    available: bool
    provenance: str = ""
    tol: float = float("nan")
    rows: list = field(default_factory=list)
    reason: str = ""

    @property
    def max_residual(self) -> float:
        if not self.rows:
            return float("nan")
        return max(max(abs(r1), abs(r2)) for _, r1, r2 in self.rows)

    @property
    def passed(self) -> bool | None:
        if not self.available:
            return None
        return self.max_residual <= self.tol


@dataclass
class CompatibilityReport:
    model: str
    beta: ConditionCheck
    invariant: ConditionCheck
    stretch: ConditionCheck

    def all_checks(self):
        return (self.beta, self.invariant, self.stretch)

    @property
    def passed(self) -> bool:
        verdicts = [c.passed for c in self.all_checks() if c.available]
        return bool(verdicts) and all(verdicts)


def _tol(provenance: str) -> float:
    return ANALYTIC_TOL if provenance == "analytic" else FD_TOL


def _stretch_rows(model, grid):
    rows = []
    for lam in grid:
        d = model.stretch_gradient((lam, 1.0 / lam, 1.0))
        rows.append((lam, float(lam * d[0] + d[1] / lam), float(d[2])))
    return rows


def _invariant_rows(model, grid):
    rows = []
    for lam in grid:
        I = 1.0 + lam * lam + 1.0 / (lam * lam)
        d1, d2, d3 = model.invariant_gradient(I, I, 1.0)
        rows.append((lam, float(d1 - d2), float(I * d2 + d3)))
    return rows


def _beta_rows(model, grid):
    rows = []
    for lam in grid:
        b = betas(model, np.diag([lam * lam, 1.0 / (lam * lam), 1.0]))
        rows.append((lam, b.beta1 + b.beta_m1, b.beta0))
    return rows


def check_compatibility(model: ConstitutiveModel, lambda_grid=DEFAULT_LAMBDA_GRID) -> CompatibilityReport:
    """Evaluate the three equivalent forms of the compatibility conditions:

    * beta form: beta_1 + beta_-1 = 0 and beta_0 = 0,
    * invariant form: dW/dI1 = dW/dI2 and I2 dW/dI2 + dW/dI3 = 0 on I1 = I2, I3 = 1,
    * stretch form: lambda dW/dlambda_1 + dW/dlambda_2 / lambda = 0 and dW/dlambda_3 = 0,

    each on stretches (lambda, 1/lambda, 1). Forms the model cannot express
    are reported as unavailable.
    """
    grid = [float(x) for x in lambda_grid]
    if any(x <= 0 for x in grid):
        raise ValueError("lambda grid must be positive")

    if model.has(INVARIANT_ENERGY):
        prov = model.invariant_gradient_provenance()
        beta = ConditionCheck("beta", True, prov, _tol(prov), _beta_rows(model, grid))
        invariant = ConditionCheck("invariant", True, prov, _tol(prov), _invariant_rows(model, grid))
    else:
        reason = f"{model.name} has no invariant representation"
        beta = ConditionCheck("beta", False, reason=reason)
        invariant = ConditionCheck("invariant", False, reason=reason)

    try:
        prov = model.stretch_gradient_provenance()
        stretch = ConditionCheck("stretch", True, prov, _tol(prov), _stretch_rows(model, grid))
    except UnsupportedParameterization as exc:
        stretch = ConditionCheck("stretch", False, reason=str(exc))
    return CompatibilityReport(model.name, beta, invariant, stretch)


def tc_symmetry_test(model: ConstitutiveModel, samples: int = 1000, seed: int = 0,
                     points=None, low: float = 0.3, high: float = 3.0) -> float:
    """Largest relative gap |W(F) - W(F^-1)| over random principal stretches
    in [low, high]^3 (or over explicit ``points``)."""
    if points is None:
        rng = np.random.default_rng(seed)
        points = rng.uniform(low, high, size=(samples, 3))
    worst = 0.0
    for lam in np.asarray(points, dtype=float).reshape(-1, 3):
        w, w_inv = model.energy(lam), model.energy(1.0 / lam)
        gap = abs(w - w_inv) / max(1.0, abs(w), abs(w_inv))
        worst = max(worst, gap)
    return worst
