"""Isotropic constitutive models and their stress maps."""

from .fd import fd_gradient
from .models import (
    ANALYTIC_INVARIANT_GRADIENT,
    ANALYTIC_STRETCH_GRADIENT,
    CAPABILITIES,
    DIRECT_BIOT_LAW,
    INVARIANT_ENERGY,
    MODELS,
    STRETCH_ENERGY,
    Bazant,
    Becker,
    BlatzKo,
    ConstitutiveModel,
    ExponentiatedHencky,
    Hencky,
    MooneyRivlinTC,
    NeoLog,
    ValanisLandel,
    canonical_name,
    catalogue,
    check_stretches,
    make_model,
    shear_family_stretches,
    model_from_dict,
    model_to_dict,
    stretch_invariants,
)
from .stress import (
    BetaCoefficients,
    becker_biot_stress,
    betas,
    biot_principal,
    biot_stress,
    cauchy_from_b,
    cauchy_stress,
    energy,
    kirchhoff_principal,
    kirchhoff_stress,
    linear_cauchy,
    principal_cauchy,
)
