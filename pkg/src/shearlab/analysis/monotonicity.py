"""Shear monotonicity in simple shear and a sampled probe of Hill's inequality."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..constitutive.fd import central_difference, second_difference
from ..constitutive.models import INVARIANT_ENERGY, ConstitutiveModel, shear_family_stretches
from ..constitutive.stress import betas, cauchy_stress, kirchhoff_stress
from ..errors import UnsupportedParameterization
from ..kinematics import simple_shear
from ..tensor3 import IDENTITY, inner, sym_exp

DEFAULT_GAMMA_GRID = tuple(np.linspace(0.0, 2.0, 41))
SIGMA_STEP = 1e-5
ENERGY_STEP = 1e-4
CROSS_CHECK_TOL = 1e-5


def simple_shear_cauchy(model: ConstitutiveModel, gamma: float) -> np.ndarray:
    """Cauchy stress of F = id + gamma e1 (x) e2.

    Invariant models use the closed form in beta_0, beta_1, beta_-1 at
    I1 = I2 = 3 + gamma^2, I3 = 1; stretch-only models go through the
    spectral route.
    """
    gamma = float(gamma)
    if not model.has(INVARIANT_ENERGY):
        return cauchy_stress(model, simple_shear(gamma))
    g2 = gamma * gamma
    F = simple_shear(gamma)
    b = betas(model, F @ F.T)
    d = b.beta1 - b.beta_m1
    sigma = (b.beta0 + b.beta1 + b.beta_m1) * IDENTITY
    sigma[0, 0] += b.beta1 * g2
    sigma[1, 1] += b.beta_m1 * g2
    sigma[0, 1] = sigma[1, 0] = d * gamma
    return sigma


def shear_energy(model: ConstitutiveModel, gamma: float) -> float:
    """g(gamma) = W(3 + gamma^2, 3 + gamma^2, 1); stretch-only models are
    evaluated at the matching principal stretches (lambda, 1/lambda, 1)."""
    I = 3.0 + gamma * gamma
    if model.has(INVARIANT_ENERGY):
        return model.invariant_energy(I, I, 1.0)
    return model.energy(shear_family_stretches(I))


@dataclass
class MonotonicityReport:
    model: str
    rows: list  # (gamma, sigma12, dsigma12/dgamma, g'')
    cross_check_tol: float = CROSS_CHECK_TOL

    @property
    def monotone(self) -> bool:
        return all(d > 0.0 for _, _, d, _ in self.rows)

    @property
    def cross_check_residual(self) -> float:
        return max(abs(d - g2) for _, _, d, g2 in self.rows)

    @property
    def cross_check_passed(self) -> bool:
        return self.cross_check_residual <= self.cross_check_tol

    @property
    def passed(self) -> bool:
        return self.monotone and self.cross_check_passed


def shear_monotonicity(model: ConstitutiveModel, gamma_grid=DEFAULT_GAMMA_GRID) -> MonotonicityReport:
    if not model.has(INVARIANT_ENERGY):
        raise UnsupportedParameterization(f"{model.name} has no invariant representation")

    def s12(g):
        return simple_shear_cauchy(model, g)[0, 1]

    rows = []
    for g in gamma_grid:
        g = float(g)
        d = central_difference(s12, g, SIGMA_STEP)
        g2 = second_difference(lambda t: shear_energy(model, t), g, ENERGY_STEP)
        rows.append((g, float(s12(g)), float(d), float(g2)))
    return MonotonicityReport(model.name, rows)


@dataclass
class HillProbeResult:
    minimum: float
    pairs: int
    violating_pair: tuple | None = None  # (X1, X2) with V = exp X

    @property
    def passed(self) -> bool:
        return self.minimum > 0.0


def _random_log_stretch(rng, scale):
    A = rng.uniform(-1.0, 1.0, size=(3, 3))
    return scale * 0.5 * (A + A.T)


def hill_monotonicity_probe(model, pairs: int = 1000, seed: int = 0, scale: float = 1.0) -> HillProbeResult:
    """Minimum of <tau(V1) - tau(V2), log V1 - log V2> over random distinct
    pairs V = exp X, X symmetric with entries in [-scale, scale].

    ``model`` is either a ConstitutiveModel or a callable V -> tau.
    """
    if isinstance(model, ConstitutiveModel):
        def tau(V):
            return kirchhoff_stress(model, V)
    else:
        tau = model
    rng = np.random.default_rng(seed)
    worst, worst_pair = np.inf, None
    for _ in range(pairs):
        X1 = _random_log_stretch(rng, scale)
        X2 = _random_log_stretch(rng, scale)
        while np.allclose(X1, X2):
            X2 = _random_log_stretch(rng, scale)
        value = inner(tau(sym_exp(X1)) - tau(sym_exp(X2)), X1 - X2)
        if value < worst:
            worst, worst_pair = value, (X1, X2)
    return HillProbeResult(float(worst), pairs, worst_pair if worst <= 0.0 else None)
