"""Biot-stress analogue: pure shear stretch U_alpha against pure shear Biot stress."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..constitutive.models import ConstitutiveModel
from ..constitutive.stress import biot_stress
from ..kinematics import pure_shear_stretch
from .purity import is_pure_shear_stress

DEFAULT_ALPHA_GRID = tuple(np.linspace(-1.0, 1.0, 21))


@dataclass
class BiotCheckReport:
    model: str
    rows: list  # (alpha, is pure, s, residual)

    @property
    def passed(self) -> bool:
        return all(pure for _, pure, _, _ in self.rows)


def biot_pure_shear_check(model: ConstitutiveModel, alpha_grid=DEFAULT_ALPHA_GRID,
                          tol: float | None = None) -> BiotCheckReport:
    """Biot stress at U_alpha = exp(alpha (e1 (x) e2 + e2 (x) e1)) for each alpha,
    tested against the pure shear pattern."""
    rows = []
    for a in alpha_grid:
        T = biot_stress(model, pure_shear_stretch(float(a)))
        check = is_pure_shear_stress(T, tol)
        rows.append((float(a), check.is_pure_shear, check.s, check.residual))
    return BiotCheckReport(model.name, rows)
