"""Stress maps for isotropic models: beta representation and principal formulas."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import Singular, UnsupportedParameterization
from ..tensor3 import (
    IDENTITY, as_sym, as_tensor, cof, det, dev, invariants, norm, spd_log, sym_eig,
)
from .models import INVARIANT_ENERGY, Becker, ConstitutiveModel, check_stretches


@dataclass(frozen=True)
class BetaCoefficients:
    beta0: float
    beta1: float
    beta_m1: float

    def assemble(self, B) -> np.ndarray:
        B = as_sym(B)
        B_inv = _sym_inverse(B)
        return self.beta0 * IDENTITY + self.beta1 * B + self.beta_m1 * B_inv


def _sym_inverse(B) -> np.ndarray:
    return cof(B).T / det(B)


def energy(model: ConstitutiveModel, lambdas) -> float:
    return model.energy(lambdas)


def betas(model: ConstitutiveModel, B) -> BetaCoefficients:
    """beta_0, beta_1, beta_-1 of sigma = beta_0 id + beta_1 B + beta_-1 B^-1."""
    if not model.has(INVARIANT_ENERGY):
        raise UnsupportedParameterization(f"{model.name} has no invariant representation")
    I1, I2, I3 = invariants(as_sym(B))
    d1, d2, d3 = model.invariant_gradient(I1, I2, I3)
    root = np.sqrt(I3)
    return BetaCoefficients(
        float(2.0 / root * (I2 * d2 + I3 * d3)),
        float(2.0 / root * d1),
        float(-2.0 * root * d2),
    )


def biot_principal(model: ConstitutiveModel, lambdas) -> np.ndarray:
    """T_i = dW/dlambda_i."""
    return model.stretch_gradient(check_stretches(lambdas))


def kirchhoff_principal(model: ConstitutiveModel, lambdas) -> np.ndarray:
    """tau_i = lambda_i dW/dlambda_i."""
    lam = check_stretches(lambdas)
    return lam * model.stretch_gradient(lam)


def principal_cauchy(model: ConstitutiveModel, lambdas) -> np.ndarray:
    """sigma_i = lambda_i / (lambda_1 lambda_2 lambda_3) dW/dlambda_i."""
    lam = check_stretches(lambdas)
    return kirchhoff_principal(model, lam) / np.prod(lam)


def _left_cauchy_green(F) -> np.ndarray:
    F = as_tensor(F)
    J = det(F)
    if not J > 0.0:
        raise Singular(f"det F = {J:.3e} is not positive")
    B = F @ F.T
    return 0.5 * (B + B.T)


def _spectral_cauchy(model, B) -> np.ndarray:
    eig = sym_eig(B)
    lam = np.sqrt(np.clip(eig.eigenvalues, 0.0, None))
    sig = principal_cauchy(model, lam)
    Q = eig.eigenvectors
    S = (Q * sig) @ Q.T
    return 0.5 * (S + S.T)


def cauchy_from_b(model: ConstitutiveModel, B, route: str = "auto") -> np.ndarray:
    """Cauchy stress as a function of B = F F^T.

    ``route`` is "beta" (invariant representation), "spectral" (principal
    stresses in the eigenframe of B) or "auto" (beta when available).
    """
    B = as_sym(B)
    if route == "auto":
        route = "beta" if model.has(INVARIANT_ENERGY) else "spectral"
    if route == "beta":
        return betas(model, B).assemble(B)
    if route == "spectral":
        return _spectral_cauchy(model, B)
    raise ValueError(f"unknown route {route!r}")


def cauchy_stress(model: ConstitutiveModel, F, route: str = "auto") -> np.ndarray:
    return cauchy_from_b(model, _left_cauchy_green(F), route)


def _spectral_on_stretch(values_fn, V) -> np.ndarray:
    eig = sym_eig(V)
    vals = values_fn(check_stretches(eig.eigenvalues))
    Q = eig.eigenvectors
    S = (Q * vals) @ Q.T
    return 0.5 * (S + S.T)


def kirchhoff_stress(model: ConstitutiveModel, V) -> np.ndarray:
    """tau(V) = det(V) sigma(V^2), assembled in the eigenframe of V."""
    return _spectral_on_stretch(lambda lam: kirchhoff_principal(model, lam), as_sym(V))


def biot_stress(model: ConstitutiveModel, U) -> np.ndarray:
    """Biot stress as a function of the right stretch U."""
    if isinstance(model, Becker):
        return becker_biot_stress(U, model.params["mu"], model.params["lam"])
    return _spectral_on_stretch(lambda lam: biot_principal(model, lam), as_sym(U))


def becker_biot_stress(U, mu: float, lam: float) -> np.ndarray:
    """T_Biot(U) = 2 mu log U + lam tr(log U) id."""
    L = spd_log(U)
    return 2.0 * mu * L + lam * np.trace(L) * IDENTITY


def linear_cauchy(eps, mu: float, kappa: float) -> np.ndarray:
    """sigma_lin = 2 mu dev(eps) + kappa tr(eps) id."""
    eps = as_sym(eps)
    return 2.0 * mu * dev(eps) + kappa * np.trace(eps) * IDENTITY


def commutator_norm(A, B) -> float:
    return norm(A @ B - B @ A)
