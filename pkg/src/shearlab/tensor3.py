"""
3x3 tensor algebra.

All routines take and return ``numpy.ndarray`` of shape (3, 3) (or (3,) for
principal values). Symmetric inputs are symmetrized on entry; matrix
functions of symmetric tensors are evaluated spectrally through a cyclic
Jacobi eigensolver, which stays accurate for repeated eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NotSpd, Singular

IDENTITY = np.eye(3)
_ROWS = range(3)

JACOBI_TOL = 1e-15
JACOBI_MAX_SWEEPS = 50
SPD_RTOL = 1e-14
SYMMETRY_RTOL = 1e-8


class Invariants(NamedTuple):
    I1: float
    I2: float
    I3: float


@dataclass(frozen=True)
class EigenSystem3:
    """Eigenvalues sorted descending; eigenvectors stored as the columns of a
    proper rotation."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        Q = self.eigenvectors
        return (Q * self.eigenvalues) @ Q.T


class PolarDecomposition(NamedTuple):
    V: np.ndarray
    R: np.ndarray
    U: np.ndarray


def as_tensor(A) -> np.ndarray:
    A = np.array(A, dtype=float)
    if A.shape != (3, 3):
        raise ValueError(f"expected a 3x3 tensor, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("tensor has non-finite entries")
    return A


def as_sym(S) -> np.ndarray:
    """Return ``S`` as a symmetric tensor; gross asymmetry is an error."""
    S = as_tensor(S)
    skew = norm(S - S.T)
    if skew > SYMMETRY_RTOL * (1.0 + norm(S)):
        raise ValueError(f"tensor is not symmetric (skew part norm {skew:.3e})")
    return 0.5 * (S + S.T)


def norm(A) -> float:
    """Frobenius norm."""
    return float(np.sqrt(np.sum(np.square(A))))


def inner(A, B) -> float:
    """Frobenius inner product <A, B> = tr(A^T B)."""
    return float(np.sum(np.asarray(A) * np.asarray(B)))


def det(A) -> float:
    a = np.asarray(A, dtype=float)
    return float(
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


def cof(A) -> np.ndarray:
    """Cofactor matrix; equals det(A) * A^-T whenever A is invertible."""
    a = as_tensor(A)
    c = np.empty((3, 3))
    for i in _ROWS:
        i1, i2 = (i + 1) % 3, (i + 2) % 3
        for j in _ROWS:
            j1, j2 = (j + 1) % 3, (j + 2) % 3
            # cyclic index ordering absorbs the (-1)^(i+j) sign
            c[i, j] = a[i1, j1] * a[i2, j2] - a[i1, j2] * a[i2, j1]
    return c


def dev(S) -> np.ndarray:
    S = as_tensor(S)
    return S - (np.trace(S) / 3.0) * IDENTITY


def invariants(B) -> Invariants:
    """Principal invariants (trace, trace of cofactor, determinant)."""
    b = as_tensor(B)
    i1 = b[0, 0] + b[1, 1] + b[2, 2]
    i2 = (
        b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
        + b[0, 0] * b[2, 2] - b[0, 2] * b[2, 0]
        + b[1, 1] * b[2, 2] - b[1, 2] * b[2, 1]
    )
    return Invariants(float(i1), float(i2), det(b))


def _jacobi(a: list, v: list) -> int:
    """In-place cyclic Jacobi on nested lists; returns the sweep count."""
    scale = math.sqrt(sum(a[i][j] ** 2 for i in _ROWS for j in _ROWS))
    if scale == 0.0:
        return 0
    threshold = JACOBI_TOL * scale
    for sweep in range(1, JACOBI_MAX_SWEEPS + 1):
        off = math.sqrt(2.0 * (a[0][1] ** 2 + a[0][2] ** 2 + a[1][2] ** 2))
        if off <= threshold:
            return sweep - 1
        for p, q in ((0, 1), (0, 2), (1, 2)):
            apq = a[p][q]
            if apq == 0.0:
                continue
            app, aqq = a[p][p], a[q][q]
            # off-diagonal entry below the resolution of both diagonal entries
            if sweep > 3 and abs(app) + 100.0 * abs(apq) == abs(app) and \
                    abs(aqq) + 100.0 * abs(apq) == abs(aqq):
                a[p][q] = a[q][p] = 0.0
                continue
            theta = (aqq - app) / (2.0 * apq)
            if abs(theta) > 1e150:
                t = 0.5 / theta
            else:
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            for k in _ROWS:
                akp, akq = a[k][p], a[k][q]
                a[k][p] = c * akp - s * akq
                a[k][q] = s * akp + c * akq
            for k in _ROWS:
                apk, aqk = a[p][k], a[q][k]
                a[p][k] = c * apk - s * aqk
                a[q][k] = s * apk + c * aqk
            a[p][q] = a[q][p] = 0.0
            for k in _ROWS:
                vkp, vkq = v[k][p], v[k][q]
                v[k][p] = c * vkp - s * vkq
                v[k][q] = s * vkp + c * vkq
    return JACOBI_MAX_SWEEPS


def sym_eig(S) -> EigenSystem3:
    """Eigen-decomposition of a symmetric tensor by cyclic Jacobi rotations.

    Eigenvalues come back in descending order (ties keep the Jacobi order)
    and the eigenvector frame is right-handed.
    """
    S = as_sym(S)
    a = S.tolist()
    v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    sweeps = _jacobi(a, v)
    d = [a[0][0], a[1][1], a[2][2]]
    order = sorted(range(3), key=lambda i: -d[i])
    values = np.array([d[i] for i in order])
    Q = np.array(v)[:, order]
    if det(Q) < 0.0:
        Q[:, 2] = -Q[:, 2]
    return EigenSystem3(values, Q, sweeps)


def _spectral(eig: EigenSystem3, values) -> np.ndarray:
    Q = eig.eigenvectors
    M = (Q * np.asarray(values, dtype=float)) @ Q.T
    return 0.5 * (M + M.T)


def _spd_eig(B) -> EigenSystem3:
    eig = sym_eig(B)
    threshold = SPD_RTOL * max(1.0, norm(B))
    if eig.eigenvalues[-1] <= threshold:
        raise NotSpd(
            f"smallest eigenvalue {eig.eigenvalues[-1]:.3e} is not above {threshold:.1e}"
        )
    return eig


def spd_sqrt(B) -> np.ndarray:
    eig = _spd_eig(B)
    return _spectral(eig, np.sqrt(eig.eigenvalues))


def spd_inv(B) -> np.ndarray:
    eig = _spd_eig(B)
    return _spectral(eig, 1.0 / eig.eigenvalues)


def spd_log(V) -> np.ndarray:
    eig = _spd_eig(V)
    return _spectral(eig, np.log(eig.eigenvalues))


def sym_exp(X) -> np.ndarray:
    eig = sym_eig(X)
    return _spectral(eig, np.exp(eig.eigenvalues))


def sym_function(S, f) -> np.ndarray:
    """Apply a scalar function to the eigenvalues of a symmetric tensor."""
    eig = sym_eig(S)
    return _spectral(eig, [f(x) for x in eig.eigenvalues])


def polar_decompose(F) -> PolarDecomposition:
    """Left and right polar decomposition F = V R = R U."""
    F = as_tensor(F)
    J = det(F)
    if J <= SPD_RTOL * max(1.0, norm(F)) ** 3:
        raise Singular(f"det F = {J:.3e} is not positive")
    eigC = _spd_eig(F.T @ F)
    U = _spectral(eigC, np.sqrt(eigC.eigenvalues))
    U_inv = _spectral(eigC, 1.0 / np.sqrt(eigC.eigenvalues))
    R = F @ U_inv
    V = spd_sqrt(F @ F.T)
    return PolarDecomposition(V, R, U)


def is_spd(S) -> bool:
    try:
        _spd_eig(S)
    except NotSpd:
        return False
    return True
