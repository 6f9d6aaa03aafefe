import math

import numpy as np
import pytest

from helpers import catalogue_models
from shearlab.analysis import (
    audit, biot_pure_shear_check, check_compatibility, classify_effects,
    hill_monotonicity_probe, invert_pure_shear, invert_pure_shear_multistart,
    is_pure_shear_stress, richter_check, shear_energy, shear_monotonicity,
    simple_shear_cauchy, tc_symmetry_test,
)
from shearlab.constitutive import (
    INVARIANT_ENERGY, Bazant, Becker, BlatzKo, ExponentiatedHencky, Hencky, MooneyRivlinTC,
    NeoLog, ValanisLandel, betas, cauchy_from_b, cauchy_stress, linear_cauchy,
)
from shearlab.errors import DegenerateForm, NonConvergence, UnsupportedParameterization
from shearlab.kinematics import (
    SHEAR_PATTERN, left_finite_shear, pure_shear_stretch, simple_shear,
)
from shearlab.tensor3 import IDENTITY, norm, spd_log, sym_exp


# -- purity and effects -----------------------------------------------------

def test_purity_examples():
    c = is_pure_shear_stress(3.0 * SHEAR_PATTERN)
    assert c.is_pure_shear and c.s == 3.0 and c.residual == 0.0
    z = is_pure_shear_stress(np.zeros((3, 3)))
    assert z.is_pure_shear and z.s == 0.0
    sigma = cauchy_stress(NeoLog(1.0), simple_shear(1.0))
    assert np.allclose(sigma, [[1, 1, 0], [1, 0, 0], [0, 0, 0]], atol=1e-14)
    c = is_pure_shear_stress(sigma)
    assert not c.is_pure_shear and c.residual == pytest.approx(1.0)


def test_effect_classification_examples():
    e = classify_effects(np.array([[1.0, math.sqrt(0.5), 0], [math.sqrt(0.5), 1.0, 0], [0, 0, 1.0]]))
    assert e.poynting == "none" and e.kelvin and e.planar
    assert e.detB == pytest.approx(0.5)
    e = classify_effects(IDENTITY)
    assert e.poynting == "none" and not e.kelvin and e.planar
    V = pure_shear_stretch(0.5)
    e = classify_effects(V @ V)
    assert e.b11 == pytest.approx(math.cosh(1.0))
    assert e.poynting == "positive" and not e.kelvin and e.planar
    e = classify_effects(np.diag([0.9, 1.0, 1.2]))
    assert e.poynting == "negative" and e.kelvin and not e.planar


# -- compatibility ----------------------------------------------------------

def test_hencky_compatibility():
    rep = check_compatibility(Hencky(1.0, 1.0))
    assert rep.stretch.available and rep.stretch.provenance == "analytic"
    assert rep.stretch.max_residual <= 1e-9
    assert rep.stretch.passed and rep.passed
    assert not rep.beta.available and rep.beta.passed is None
    assert "invariant" in rep.invariant.reason


def test_blatz_ko_fails_compatibility():
    rep = check_compatibility(BlatzKo(1.0), (0.5, 1.0, 2.0))
    assert not rep.passed
    lam2 = dict((row[0], row[1]) for row in rep.stretch.rows)[2.0]
    # lambda dW/dl1 + dW/dl2 / lambda = mu (l^2 - 1 + l^-2 - 1) for J = 1
    assert lam2 == pytest.approx(4 + 0.25 - 2)
    assert rep.beta.rows[2][2] != 0.0


def test_reference_point_residuals_vanish():
    # the stretch-form residuals at lambda = 1 are sigma_1 + sigma_2 and
    # sigma_3 of a stress-free reference
    for m in catalogue_models():
        _, r1, r2 = check_compatibility(m, (1.0,)).stretch.rows[0]
        assert abs(r1) <= 1e-12 and abs(r2) <= 1e-12
    # the beta form need not vanish there: Blatz-Ko has beta_1 + beta_-1 = mu
    _, r1, r2 = check_compatibility(BlatzKo(1.3), (1.0,)).beta.rows[0]
    assert r1 == pytest.approx(1.3) and r2 == pytest.approx(-1.3)


def test_compatible_models_pass_all_forms():
    for m in (Bazant(1.0), MooneyRivlinTC(1.0, kappa=1.0), MooneyRivlinTC(2.0),
              ExponentiatedHencky(1.0, 1.0), ValanisLandel(1.0, w="log_quadratic", kappa=1.0)):
        rep = check_compatibility(m)
        assert rep.passed, m
        for c in rep.all_checks():
            if c.available:
                assert c.passed


def test_fd_provenance_tolerance():
    class Plain(MooneyRivlinTC):
        capabilities = frozenset({INVARIANT_ENERGY})

    rep = check_compatibility(Plain(1.0, kappa=1.0))
    assert rep.invariant.provenance == "fd" and rep.invariant.tol == 1e-5
    assert rep.passed


def test_compatibility_rejects_bad_grid():
    with pytest.raises(ValueError):
        check_compatibility(NeoLog(1.0), (0.0, 1.0))


def test_tc_symmetry():
    for m in (Hencky(1, 1), ExponentiatedHencky(1, 1), Bazant(1)):
        assert tc_symmetry_test(m, samples=300) <= 1e-12
    assert tc_symmetry_test(BlatzKo(1.0), points=[(2.0, 1.0, 1.0)]) > 1e-2
    # oracle: mu/2 (I1 + 2 I3^-1/2 - 5) at B and B^-1
    w, w_inv = 0.5 * (6 + 1 - 5), 0.5 * (0.25 + 2 + 4 - 5)
    assert tc_symmetry_test(BlatzKo(1.0), points=[(2.0, 1.0, 1.0)]) == pytest.approx(abs(w - w_inv) / max(1, w, w_inv))
    assert tc_symmetry_test(BlatzKo(1.0), points=[(1.0, 1.0, 1.0)]) == 0.0
    assert tc_symmetry_test(Bazant(1), samples=50, seed=3) == tc_symmetry_test(Bazant(1), samples=50, seed=3)


# -- inverse solve ----------------------------------------------------------

@pytest.mark.parametrize("s", [0.3, 1.0, 2.5, -0.7])
def test_neo_log_inverse_closed_form(s):
    r = invert_pure_shear(NeoLog(1.0), s)
    assert r.converged
    assert r.B.p == pytest.approx(1.0, abs=1e-10)
    assert r.B.q == pytest.approx(s / math.sqrt(1 + s * s), abs=1e-10)
    assert r.B.r == pytest.approx(1.0, abs=1e-10)
    assert r.B.det == pytest.approx(1 / (1 + s * s), abs=1e-10)
    assert r.sigma22_residual <= 1e-9
    assert r.classification.kelvin and r.classification.planar
    F = r.decomposition.deformation()
    assert norm(F @ F.T - r.B.matrix) <= 1e-12


def test_inverse_zero_stress_gives_identity():
    for m in catalogue_models():
        r = invert_pure_shear(m, 0.0)
        assert r.converged
        assert norm(r.B.matrix - IDENTITY) <= 1e-10


def test_hencky_inverse_is_pure_shear_stretch():
    r = invert_pure_shear(Hencky(1.0, 1.0), 0.8)
    V = pure_shear_stretch(0.4)
    assert norm(r.B.matrix - V @ V) <= 1e-9
    assert r.classification.planar and not r.classification.kelvin
    assert r.classification.poynting == "positive"


def test_inverse_round_trip_for_compatible_models():
    for m in (Hencky(1, 1), ExponentiatedHencky(1, 2), Bazant(1.0), MooneyRivlinTC(1, kappa=1)):
        assert hill_monotonicity_probe(m, pairs=100).passed
        for s in (0.2, 0.9):
            r = invert_pure_shear(m, s)
            assert r.converged
            assert r.classification.planar and not r.classification.kelvin
            sigma = cauchy_from_b(m, r.B.matrix)
            assert norm(sigma - s * SHEAR_PATTERN) <= 1e-9


def test_inverse_non_convergence():
    r = invert_pure_shear(NeoLog(1.0), 1.0, max_iter=1)
    assert not r.converged and r.decomposition is None
    with pytest.raises(NonConvergence) as exc:
        invert_pure_shear(NeoLog(1.0), 1.0, max_iter=1, strict=True)
    assert exc.value.result.iterations == 1
    with pytest.raises(DegenerateForm):
        invert_pure_shear(NeoLog(1.0), 1.0, x0=(1.0, 1.0, 1.0))


def test_multistart_reports_distinct_roots():
    starts = [(1.0, 0.0, 1.0), (2.0, 0.5, 1.5), (0.8, -0.2, 0.7)]
    roots = invert_pure_shear_multistart(NeoLog(1.0), 1.0, starts)
    assert len(roots) == 1
    assert roots[0].B.q == pytest.approx(math.sqrt(0.5), abs=1e-10)


def test_richter_check():
    rep = richter_check(MooneyRivlinTC(1.0, kappa=1.0), [0.0, 0.3])
    assert rep.passed
    assert rep.rows[1][1] == pytest.approx(1.0, abs=1e-8)
    rep = richter_check(Hencky(1.0, 1.0), [0.5])
    assert rep.passed
    with pytest.raises(UnsupportedParameterization):
        richter_check(NeoLog(1.0), [0.5])


# -- monotonicity -----------------------------------------------------------

def test_simple_shear_cauchy():
    assert np.allclose(simple_shear_cauchy(NeoLog(1.0), 1.0), [[1, 1, 0], [1, 0, 0], [0, 0, 0]], atol=1e-14)
    for m in catalogue_models():
        assert norm(simple_shear_cauchy(m, 0.0)) <= 1e-12
        for g in (0.5, 1.7):
            direct = cauchy_stress(m, simple_shear(g))
            assert norm(simple_shear_cauchy(m, g) - direct) <= 1e-9 * max(1.0, norm(direct))
        if m.has(INVARIANT_ENERGY):
            F = simple_shear(0.5)
            b = betas(m, F @ F.T)
            assert simple_shear_cauchy(m, 0.5)[0, 1] / 0.5 == pytest.approx(b.beta1 - b.beta_m1, rel=1e-12)


def test_neo_log_monotonicity():
    rep = shear_monotonicity(NeoLog(1.0))
    assert len(rep.rows) == 41
    for g, s12, d, g2 in rep.rows:
        assert s12 == pytest.approx(g, abs=1e-12)
        assert d == pytest.approx(1.0, abs=1e-9)
    assert rep.monotone and rep.passed


def test_mooney_rivlin_monotonicity():
    rep = shear_monotonicity(MooneyRivlinTC(1.0))
    s12 = [r[1] for r in rep.rows]
    assert rep.rows[0][1] == 0.0
    assert all(b > a for a, b in zip(s12, s12[1:]))
    assert rep.passed


def test_monotonicity_requires_invariants():
    with pytest.raises(UnsupportedParameterization):
        shear_monotonicity(Hencky(1, 1))


def test_shear_energy_on_stretch_models():
    # log lambda = asinh(gamma / 2) on the simple shear family
    assert shear_energy(Hencky(1.0, 0.0), 1.0) == pytest.approx(2 * math.asinh(0.5) ** 2, rel=1e-13)
    assert shear_energy(NeoLog(1.0), 1.0) == pytest.approx(2.0)


def test_hill_probe():
    res = hill_monotonicity_probe(Hencky(1.0, 1.0), pairs=1000)
    assert res.passed and res.violating_pair is None

    def tau_linear(V):
        X = spd_log(V)
        return 2.0 * (X - np.trace(X) / 3 * IDENTITY) + 3.0 * np.trace(X) * IDENTITY

    assert hill_monotonicity_probe(tau_linear, pairs=300, scale=0.01).passed
    a = hill_monotonicity_probe(Bazant(1.0), pairs=50, seed=9)
    b = hill_monotonicity_probe(Bazant(1.0), pairs=50, seed=9)
    assert a.minimum == b.minimum


def test_hill_probe_reports_violation():
    def tau_bad(V):
        return -spd_log(V)

    res = hill_monotonicity_probe(tau_bad, pairs=20)
    assert not res.passed
    X1, X2 = res.violating_pair
    assert not np.allclose(X1, X2)
    assert np.allclose(sym_exp(X1), sym_exp(X1).T)


# -- Biot analogue ----------------------------------------------------------

def test_becker_biot_check():
    rep = biot_pure_shear_check(Becker(1.0, 3.0), [0.0, 0.25, -0.5])
    assert rep.passed
    assert rep.rows[0][2] == 0.0
    assert rep.rows[1][2] == pytest.approx(0.5, abs=1e-12)


def test_valanis_landel_biot_check():
    assert biot_pure_shear_check(ValanisLandel(1.0, w="becker")).passed
    assert biot_pure_shear_check(ValanisLandel(1.0, w="piecewise")).passed
    assert not biot_pure_shear_check(Hencky(1.0, 1.0), [0.5]).passed


# -- linear bridge ----------------------------------------------------------

def test_linear_bridge_slopes():
    from shearlab.kinematics import infinitesimal_shear
    sigma = linear_cauchy(infinitesimal_shear(0.2).strain, 1.5, 4.0)
    assert np.allclose(sigma, 0.3 * SHEAR_PATTERN, atol=1e-16)
    for m in catalogue_models():
        g = 1e-4
        slope = cauchy_stress(m, simple_shear(g))[0, 1] / g
        assert slope == pytest.approx(m.shear_modulus, rel=0.02)


# -- audit ------------------------------------------------------------------

def test_audit_report():
    rep = audit(Hencky(1.0, 1.0))
    assert rep.passed
    assert rep.tc_symmetry_gap <= 1e-12
    assert rep.hill.passed
    assert all(r.converged for r in rep.inverse)
    assert any("growth" in n for n in rep.notes)
    assert not audit(BlatzKo(1.0)).passed


def test_compatible_models_send_left_finite_shear_to_pure_shear():
    """Models passing the stretch-form check send V_alpha (via the left
    finite shear) to pure shear stress, and B = V_alpha^2."""
    for m in catalogue_models():
        if not check_compatibility(m).stretch.passed:
            continue
        for a in np.linspace(-1, 1, 21):
            F = left_finite_shear(a)
            c = is_pure_shear_stress(cauchy_stress(m, F), 1e-8)
            assert c.is_pure_shear, (m, a)
            V = pure_shear_stretch(a)
            assert norm(F @ F.T - V @ V) <= 1e-9
