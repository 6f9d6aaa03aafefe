"""
Inverse problem: given an amount of shear stress s, find B with
sigma(B) = s (e1 (x) e2 + e2 (x) e1).

Any such B commutes with the target stress, so the search runs over the
commuting forms [[p, q, 0], [q, p, 0], [0, 0, r]] only. The three equations
are sigma_12 = s, sigma_11 = 0, sigma_33 = 0; sigma_22 equals sigma_11 by
coaxiality and is checked afterwards.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..constitutive.models import ConstitutiveModel
from ..constitutive.stress import cauchy_from_b
from ..errors import DegenerateForm, NonConvergence, UnsupportedParameterization
from ..kinematics import CommutingForm, TriaxialGlide, triaxial_glide_decomposition
from .purity import EffectClassification, classify_effects

log = logging.getLogger(__name__)

MAX_ITER = 100
TOL = 1e-10
MAX_HALVINGS = 40
SPD_MARGIN = 1e-12
FD_STEP = 1e-7
POLISH_STEPS = 3


@dataclass
class InverseSolveResult:
    B: CommutingForm
    s_target: float
    s_achieved: float
    iterations: int
    residual: float
    converged: bool
    sigma22_residual: float = float("nan")
    decomposition: TriaxialGlide | None = None
    classification: EffectClassification | None = None


def _equations(model, x, s):
    sigma = cauchy_from_b(model, CommutingForm(*x).matrix)
    return np.array([sigma[0, 1] - s, sigma[0, 0], sigma[2, 2]]), sigma


def _feasible(x) -> bool:
    p, q, r = x
    return p > abs(q) + SPD_MARGIN and r > SPD_MARGIN


def _jacobian(model, x, s, f0):
    J = np.empty((3, 3))
    for j in range(3):
        h = FD_STEP * max(1.0, abs(x[j]))
        xp, xm = x.copy(), x.copy()
        xp[j] += h
        xm[j] -= h
        if _feasible(xm):
            J[:, j] = (_equations(model, xp, s)[0] - _equations(model, xm, s)[0]) / (2 * h)
        else:
            J[:, j] = (_equations(model, xp, s)[0] - f0) / h
    return J


def invert_pure_shear(model: ConstitutiveModel, s_target: float, x0=(1.0, 0.0, 1.0),
                      max_iter: int = MAX_ITER, tol: float = TOL,
                      strict: bool = False) -> InverseSolveResult:
    """Damped Newton iteration on (p, q, r) with a finite-difference Jacobian.

    Steps are halved until the iterate stays positive definite and the
    residual norm decreases. Without convergence the best iterate is
    returned with ``converged=False`` (or NonConvergence is raised when
    ``strict``).
    """
    s_target = float(s_target)
    x = np.array(x0, dtype=float)
    if not _feasible(x):
        raise DegenerateForm(f"initial guess {tuple(x)} is not positive definite")
    scale = 1.0 + abs(s_target)
    try:
        f, sigma = _equations(model, x, s_target)
    except UnsupportedParameterization:
        raise
    res = float(np.linalg.norm(f))
    it = 0
    polish = 0
    while it < max_iter:
        if res <= tol * scale:
            if polish >= POLISH_STEPS:
                break
            polish += 1
        it += 1
        J = _jacobian(model, x, s_target, f)
        try:
            dx = np.linalg.solve(J, -f)
        except np.linalg.LinAlgError:
            dx = np.linalg.lstsq(J, -f, rcond=None)[0]
        t = 1.0
        accepted = False
        ever_feasible = False
        for _ in range(MAX_HALVINGS + 1):
            trial = x + t * dx
            if _feasible(trial):
                ever_feasible = True
                f_trial, sigma_trial = _equations(model, trial, s_target)
                r_trial = float(np.linalg.norm(f_trial))
                if r_trial < res:
                    accepted = True
                    break
            t *= 0.5
        if not accepted:
            if not ever_feasible:
                raise DegenerateForm(f"Newton step leaves the positive definite region at {tuple(x)}")
            break
        x, f, sigma, res = trial, f_trial, sigma_trial, r_trial
        log.debug("iter %d: x=%s residual=%.3e step=%.3g", it, x, res, t)

    converged = res <= tol * scale
    form = CommutingForm(*map(float, x))
    result = InverseSolveResult(
        B=form, s_target=s_target, s_achieved=float(sigma[0, 1]), iterations=it,
        residual=res, converged=converged, sigma22_residual=abs(float(sigma[1, 1])),
    )
    if converged:
        result.decomposition = triaxial_glide_decomposition(form)
        result.classification = classify_effects(form.matrix)
    elif strict:
        raise NonConvergence(
            f"no convergence for s={s_target} after {it} iterations (residual {res:.3e})", result
        )
    return result


def invert_pure_shear_multistart(model, s_target, starts, **opts) -> list:
    """Run the solve from several initial forms; return the distinct converged
    solutions. No root is preferred when more than one is found."""
    found = []
    for x0 in starts:
        try:
            r = invert_pure_shear(model, s_target, x0=x0, **opts)
        except DegenerateForm:
            continue
        if not r.converged:
            continue
        key = np.array([r.B.p, r.B.q, r.B.r])
        if all(np.linalg.norm(key - np.array([o.B.p, o.B.q, o.B.r])) > 1e-6 for o in found):
            found.append(r)
    return found


@dataclass
class RichterReport:
    model: str
    rows: list  # (s, det B, |det B - 1|, ok)
    tol: float

    @property
    def passed(self) -> bool:
        return all(ok for *_, ok in self.rows)


def richter_check(model: ConstitutiveModel, s_values, tol: float = 1e-8) -> RichterReport:
    """For energies with an additive isochoric-volumetric split, a trace-free
    stress forces det B = 1 (no Kelvin effect)."""
    if not model.iso_vol_split:
        raise UnsupportedParameterization(f"{model.name} is not declared with an iso-vol split")
    rows = []
    for s in s_values:
        r = invert_pure_shear(model, s, strict=True)
        d = r.B.det
        rows.append((float(s), d, abs(d - 1.0), abs(d - 1.0) <= tol))
    return RichterReport(model.name, rows, tol)
