"""
Closed-form shear kinematics.

Index convention: the amount of shear sits in entry (1, 2) (zero-based
``[0, 1]``), i.e. ``F_gamma = id + gamma * e1 (x) e2`` so that
``F F^T = [[1 + g^2, g, 0], [g, 1, 0], [0, 0, 1]]``. Writing the dyad the
other way round gives the transpose of every deformation in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DegenerateForm, NotCommuting, NotPureShear
from .tensor3 import IDENTITY, as_sym, as_tensor, norm

# e1 (x) e2 + e2 (x) e1
SHEAR_PATTERN = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
# e1 (x) e2 - e2 (x) e1
SKEW_PATTERN = np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])

# eigenframe of every non-trivial pure shear stress
PURE_SHEAR_FRAME = np.array(
    [
        [math.sqrt(0.5), -math.sqrt(0.5), 0.0],
        [math.sqrt(0.5), math.sqrt(0.5), 0.0],
        [0.0, 0.0, 1.0],
    ]
)

PATTERN_RTOL = 1e-10

Side = Literal["left", "right"]


def default_tol(T) -> float:
    return PATTERN_RTOL * (1.0 + norm(T))


@dataclass(frozen=True)
class CommutingForm:
    """Symmetric tensor [[p, q, 0], [q, p, 0], [0, 0, r]]."""

    p: float
    q: float
    r: float

    @classmethod
    def from_eigenvalues(cls, mu1, mu2, mu3) -> "CommutingForm":
        return cls(0.5 * (mu1 + mu2), 0.5 * (mu1 - mu2), float(mu3))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.p, self.q, 0.0], [self.q, self.p, 0.0], [0.0, 0.0, self.r]])

    @property
    def eigenvalues(self) -> tuple:
        """Eigenvalues along the pure-shear frame columns (p+q, p-q, r)."""
        return (self.p + self.q, self.p - self.q, self.r)

    @property
    def is_spd(self) -> bool:
        return self.p > abs(self.q) and self.r > 0.0

    @property
    def det(self) -> float:
        return (self.p * self.p - self.q * self.q) * self.r

    def sqrt(self) -> "CommutingForm":
        """Square root evaluated on the principal values."""
        if not self.is_spd:
            raise DegenerateForm(f"{self} is not positive definite")
        l1, l2, l3 = (math.sqrt(m) for m in self.eigenvalues)
        return CommutingForm(0.5 * (l1 + l2), 0.5 * (l1 - l2), l3)


@dataclass(frozen=True)
class TriaxialGlide:
    """F = F_gamma diag(a, b, c) (side 'left') or diag(a, b, c) F_gamma ('right')."""

    gamma: float
    a: float
    b: float
    c: float
    side: Side = "left"

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0 and self.c > 0):
            raise DegenerateForm("stretch factors must be positive")

    @property
    def shear_angle(self) -> float:
        return math.atan(self.gamma)

    def deformation(self) -> np.ndarray:
        stretch = np.diag([self.a, self.b, self.c])
        glide = simple_shear(self.gamma)
        if self.side == "left":
            return glide @ stretch
        return stretch @ glide


@dataclass(frozen=True)
class InfinitesimalShearPair:
    gamma: float
    strain: np.ndarray
    rotation: np.ndarray

    def deformation(self) -> np.ndarray:
        return IDENTITY + self.strain + self.rotation


def simple_shear(gamma: float) -> np.ndarray:
    F = np.eye(3)
    F[0, 1] = gamma
    return F


def left_finite_shear(alpha: float) -> np.ndarray:
    c2, s2 = math.cosh(2 * alpha), math.sinh(2 * alpha)
    k = 1.0 / math.sqrt(c2)
    return np.array([[k, k * s2, 0.0], [0.0, k * c2, 0.0], [0.0, 0.0, 1.0]])


def right_finite_shear(alpha: float) -> np.ndarray:
    c2, s2 = math.cosh(2 * alpha), math.sinh(2 * alpha)
    k = 1.0 / math.sqrt(c2)
    return np.array([[k * c2, k * s2, 0.0], [0.0, k, 0.0], [0.0, 0.0, 1.0]])


def pure_shear_stretch(alpha: float) -> np.ndarray:
    """V_alpha = exp(alpha * (e1 (x) e2 + e2 (x) e1)); det V_alpha = 1."""
    ch, sh = math.cosh(alpha), math.sinh(alpha)
    return np.array([[ch, sh, 0.0], [sh, ch, 0.0], [0.0, 0.0, 1.0]])


def shear_rotation(alpha: float) -> np.ndarray:
    """Rotation factor shared by the left and right finite simple shear."""
    ch, sh = math.cosh(alpha), math.sinh(alpha)
    k = 1.0 / math.sqrt(math.cosh(2 * alpha))
    return np.array([[k * ch, k * sh, 0.0], [-k * sh, k * ch, 0.0], [0.0, 0.0, 1.0]])


def stretch_shear_angle(alpha: float) -> float:
    return math.atan(math.tanh(alpha))


def pure_shear_stress_tensor(s: float) -> np.ndarray:
    return s * SHEAR_PATTERN


def pure_shear_residual(T) -> tuple[float, float]:
    """Return (s, residual) with s = T[0, 1] and residual the norm of every
    entry outside the pattern plus the T[0, 1] - T[1, 0] mismatch."""
    T = as_tensor(T)
    s = float(T[0, 1])
    off = T.copy()
    off[0, 1] = 0.0
    off[1, 0] -= s
    return s, norm(off)


def diagonalize_pure_shear(T, tol: float | None = None) -> tuple[np.ndarray, float]:
    """Return (Q, s) with Q diag(s, -s, 0) Q^T = T for a pure shear stress T."""
    if tol is None:
        tol = default_tol(T)
    s, residual = pure_shear_residual(T)
    if residual > tol:
        raise NotPureShear(f"pattern residual {residual:.3e} exceeds {tol:.1e}", residual)
    return PURE_SHEAR_FRAME.copy(), s


def commuting_form_of(P, tol: float | None = None) -> CommutingForm:
    """Extract (p, q, r) if P commutes with every pure shear stress."""
    P = as_sym(P)
    if tol is None:
        tol = default_tol(P)
    form = CommutingForm(
        0.5 * float(P[0, 0] + P[1, 1]), 0.5 * float(P[0, 1] + P[1, 0]), float(P[2, 2])
    )
    residual = norm(P - form.matrix)
    if residual > tol:
        raise NotCommuting(f"not of commuting form, residual {residual:.3e}", residual)
    return form


def _check_form(form: CommutingForm):
    if not form.is_spd:
        raise DegenerateForm(f"need p > |q| and r > 0, got {form}")


def triaxial_glide_decomposition(B: CommutingForm) -> TriaxialGlide:
    """F = F_gamma diag(a, b, c) with F F^T = B (up to a right rotation)."""
    _check_form(B)
    p, q, r = B.p, B.q, B.r
    return TriaxialGlide(q / p, math.sqrt((p * p - q * q) / p), math.sqrt(p), math.sqrt(r), "left")


def biot_triaxial_decomposition(C: CommutingForm) -> TriaxialGlide:
    """F = diag(a, b, c) F_gamma with F^T F = C (up to a left rotation)."""
    _check_form(C)
    p, q, r = C.p, C.q, C.r
    return TriaxialGlide(q / p, math.sqrt(p), math.sqrt((p * p - q * q) / p), math.sqrt(r), "right")


def infinitesimal_shear(gamma: float) -> InfinitesimalShearPair:
    half = 0.5 * gamma
    return InfinitesimalShearPair(gamma, half * SHEAR_PATTERN, half * SKEW_PATTERN)


LINEARIZATION_FAMILIES = ("left", "right", "stretch", "rotation")


def linearization_residual(alpha: float, family: str) -> float:
    """Distance of a finite family member from its first-order expansion
    under the identification gamma = 2 alpha."""
    if family == "left":
        exact, first = left_finite_shear(alpha), simple_shear(2 * alpha)
    elif family == "right":
        exact, first = right_finite_shear(alpha), simple_shear(2 * alpha)
    elif family == "stretch":
        exact, first = pure_shear_stretch(alpha), IDENTITY + alpha * SHEAR_PATTERN
    elif family == "rotation":
        exact, first = shear_rotation(alpha), IDENTITY + alpha * SKEW_PATTERN
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {LINEARIZATION_FAMILIES}")
    return norm(exact - first)


def loglog_slope(alphas, family: str) -> float:
    """Least-squares slope of log(residual) against log(|alpha|)."""
    x = np.log(np.abs(np.asarray(alphas, dtype=float)))
    y = np.log([linearization_residual(a, family) for a in alphas])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
