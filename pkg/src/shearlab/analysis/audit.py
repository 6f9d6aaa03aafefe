"""One-shot audit bundling the individual checks for a model."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..constitutive.models import INVARIANT_ENERGY, STRETCH_ENERGY, ConstitutiveModel
from ..errors import NonConvergence, UnsupportedParameterization
from .biot import biot_pure_shear_check
from .compatibility import CompatibilityReport, check_compatibility, tc_symmetry_test
from .inverse import InverseSolveResult, invert_pure_shear
from .monotonicity import HillProbeResult, MonotonicityReport, hill_monotonicity_probe, shear_monotonicity

log = logging.getLogger(__name__)

TC_SAMPLES = 200
HILL_PAIRS = 200
AUDIT_S_VALUES = (0.25, 0.5, 1.0)


@dataclass
class ShearAnalysisReport:
    model: str
    params: dict
    growth: str | None
    compatibility: CompatibilityReport
    tc_symmetry_gap: float | None = None
    hill: HillProbeResult | None = None
    monotonicity: MonotonicityReport | None = None
    biot_pure_shear: bool | None = None
    inverse: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Verdict of the stress-compatibility audit proper; the remaining
        sections are reported for information."""
        return self.compatibility.passed


def audit(model: ConstitutiveModel, seed: int = 0, s_values=AUDIT_S_VALUES) -> ShearAnalysisReport:
    report = ShearAnalysisReport(
        model.name, dict(model.params), model.growth, check_compatibility(model)
    )
    if model.has(STRETCH_ENERGY):
        report.tc_symmetry_gap = tc_symmetry_test(model, TC_SAMPLES, seed)
    report.hill = hill_monotonicity_probe(model, HILL_PAIRS, seed)
    if model.has(INVARIANT_ENERGY):
        report.monotonicity = shear_monotonicity(model)
    else:
        report.notes.append("shear monotonicity skipped: no invariant representation")
    report.biot_pure_shear = biot_pure_shear_check(model).passed
    for s in s_values:
        try:
            result: InverseSolveResult = invert_pure_shear(model, s)
        except (NonConvergence, UnsupportedParameterization, ValueError) as exc:
            log.info("inverse solve failed for s=%s: %s", s, exc)
            report.notes.append(f"inverse solve failed for s={s}: {exc}")
            continue
        report.inverse.append(result)
    if model.growth:
        report.notes.append(f"declared growth class '{model.growth}' is recorded, not verified")
    return report
