"""Purity and effect classification, compatibility audits, the inverse solve,
shear monotonicity and the Biot analogue."""

from .audit import ShearAnalysisReport, audit
from .biot import BiotCheckReport, biot_pure_shear_check
from .compatibility import (
    CompatibilityReport,
    ConditionCheck,
    check_compatibility,
    tc_symmetry_test,
)
from .inverse import (
    InverseSolveResult,
    RichterReport,
    invert_pure_shear,
    invert_pure_shear_multistart,
    richter_check,
)
from .monotonicity import (
    HillProbeResult,
    MonotonicityReport,
    hill_monotonicity_probe,
    shear_energy,
    shear_monotonicity,
    simple_shear_cauchy,
)
from .purity import EffectClassification, PurityCheck, classify_effects, is_pure_shear_stress
