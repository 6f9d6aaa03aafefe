"""Pure shear recognition and the Poynting/Kelvin classification of B."""

from __future__ import annotations

from dataclasses import dataclass

from ..kinematics import default_tol, pure_shear_residual
from ..tensor3 import as_sym, det


@dataclass(frozen=True)
class PurityCheck:
    is_pure_shear: bool
    s: float
    residual: float


def is_pure_shear_stress(T, tol: float | None = None) -> PurityCheck:
    if tol is None:
        tol = default_tol(T)
    s, residual = pure_shear_residual(T)
    return PurityCheck(residual <= tol, s, residual)


@dataclass(frozen=True)
class EffectClassification:
    poynting: str  # "positive", "negative" or "none"
    kelvin: bool
    planar: bool
    b11: float
    detB: float
    b33: float


def classify_effects(B, tol: float = 1e-10) -> EffectClassification:
    """Positive Poynting effect iff B11 > 1, Kelvin effect iff det B != 1,
    planar iff B33 = 1, each up to ``tol``."""
    B = as_sym(B)
    b11, b33, dB = float(B[0, 0]), float(B[2, 2]), det(B)
    if b11 > 1.0 + tol:
        poynting = "positive"
    elif b11 < 1.0 - tol:
        poynting = "negative"
    else:
        poynting = "none"
    return EffectClassification(poynting, abs(dB - 1.0) > tol, abs(b33 - 1.0) <= tol, b11, dB, b33)
