"""
Isotropic constitutive models.

A model exposes its energy in principal stretches and/or in the invariants
(I1, I2, I3) of B, and declares which derivatives it knows in closed form
through ``capabilities``. Missing stretch gradients of invariant models are
obtained by the chain rule; anything else falls back to central differences.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from ..errors import InvalidParameter, InvalidStretch, UnsupportedParameterization
from .fd import central_difference, fd_gradient

STRETCH_ENERGY = "stretch-energy"
INVARIANT_ENERGY = "invariant-energy"
ANALYTIC_STRETCH_GRADIENT = "analytic-stretch-gradient"
ANALYTIC_INVARIANT_GRADIENT = "analytic-invariant-gradient"
DIRECT_BIOT_LAW = "direct-biot-law"

CAPABILITIES = (
    STRETCH_ENERGY,
    INVARIANT_ENERGY,
    ANALYTIC_STRETCH_GRADIENT,
    ANALYTIC_INVARIANT_GRADIENT,
    DIRECT_BIOT_LAW,
)


def check_stretches(lambdas) -> np.ndarray:
    lam = np.asarray(lambdas, dtype=float)
    if lam.shape != (3,):
        raise InvalidStretch(f"expected three principal stretches, got shape {lam.shape}")
    if not np.all(np.isfinite(lam)) or np.any(lam <= 0.0):
        raise InvalidStretch(f"principal stretches must be positive, got {lam}")
    return lam


def stretch_invariants(lambdas) -> tuple[float, float, float]:
    """Invariants of B = diag(lambda_i^2)."""
    a, b, c = (float(x) ** 2 for x in lambdas)
    return a + b + c, a * b + a * c + b * c, a * b * c


def shear_family_stretches(I1, I2=None, I3=1.0) -> np.ndarray:
    """Principal stretches on the simple-shear invariant family
    I1 = I2 = 3 + gamma^2, I3 = 1, namely (lambda, 1/lambda, 1) with
    lambda = (gamma + sqrt(gamma^2 + 4)) / 2. Other invariant triples have
    no unique stretch representative and are rejected."""
    if I2 is None:
        I2 = I1
    if abs(I1 - I2) > 1e-12 * max(1.0, abs(I1)) or abs(I3 - 1.0) > 1e-12 or I1 < 3.0 - 1e-12:
        raise UnsupportedParameterization(
            f"invariants ({I1}, {I2}, {I3}) are not on the simple-shear family"
        )
    gamma = math.sqrt(max(I1 - 3.0, 0.0))
    lam = 0.5 * (gamma + math.sqrt(gamma * gamma + 4.0))
    return np.array([lam, 1.0 / lam, 1.0])


def _positive(name, value):
    value = float(value)
    if not value > 0.0:
        raise InvalidParameter(f"{name} must be positive, got {value}")
    return value


class ConstitutiveModel:
    """Base class for isotropic elasticity laws.

    Subclasses implement some of ``_stretch_energy``, ``_stretch_gradient``,
    ``_invariant_energy``, ``_invariant_gradient`` and declare them in
    ``capabilities``.
    """

    name = "abstract"
    capabilities: frozenset = frozenset()
    parameter_names: tuple = ()
    iso_vol_split = False
    # recorded, not verified: invertibility of the shear response needs coercive or
    # stronger-than-logarithmic growth
    growth = "unspecified"

    def __init__(self, **params):
        unknown = set(params) - set(self.parameter_names)
        if unknown:
            raise InvalidParameter(f"{self.name}: unknown parameters {sorted(unknown)}")
        self.params = params

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.params.items() if not callable(v))
        return f"{type(self).__name__}({args})"

    def has(self, capability: str) -> bool:
        return capability in self.capabilities

    @property
    def has_energy(self) -> bool:
        return self.has(STRETCH_ENERGY) or self.has(INVARIANT_ENERGY)

    # -- energy ----------------------------------------------------------

    def energy(self, lambdas) -> float:
        lam = check_stretches(lambdas)
        if self.has(STRETCH_ENERGY):
            return float(self._stretch_energy(lam))
        if self.has(INVARIANT_ENERGY):
            return float(self._invariant_energy(*stretch_invariants(lam)))
        raise UnsupportedParameterization(f"{self.name} has no elastic energy")

    def invariant_energy(self, I1, I2, I3) -> float:
        if not self.has(INVARIANT_ENERGY):
            raise UnsupportedParameterization(f"{self.name} has no invariant representation")
        return float(self._invariant_energy(I1, I2, I3))

    # -- gradients -------------------------------------------------------

    def stretch_gradient_provenance(self) -> str:
        if self.has(ANALYTIC_STRETCH_GRADIENT) or self.has(DIRECT_BIOT_LAW):
            return "analytic"
        if self.has(INVARIANT_ENERGY) and self.has(ANALYTIC_INVARIANT_GRADIENT):
            return "analytic"
        return "fd"

    def invariant_gradient_provenance(self) -> str:
        return "analytic" if self.has(ANALYTIC_INVARIANT_GRADIENT) else "fd"

    def stretch_gradient(self, lambdas) -> np.ndarray:
        """Partial derivatives dW/dlambda_i (the principal Biot stresses)."""
        lam = check_stretches(lambdas)
        if self.has(ANALYTIC_STRETCH_GRADIENT):
            return np.asarray(self._stretch_gradient(lam), dtype=float)
        if self.has(INVARIANT_ENERGY) and self.has(ANALYTIC_INVARIANT_GRADIENT):
            return self._chain_rule(lam)
        if self.has_energy:
            return fd_gradient(self.energy, lam, "stretch")
        raise UnsupportedParameterization(f"{self.name} has no stretch parameterization")

    def invariant_gradient(self, I1, I2, I3) -> np.ndarray:
        """Partial derivatives (dW/dI1, dW/dI2, dW/dI3)."""
        if not self.has(INVARIANT_ENERGY):
            raise UnsupportedParameterization(f"{self.name} has no invariant representation")
        if self.has(ANALYTIC_INVARIANT_GRADIENT):
            return np.asarray(self._invariant_gradient(I1, I2, I3), dtype=float)
        return fd_gradient(lambda x: self._invariant_energy(*x), (I1, I2, I3), "invariant")

    def _chain_rule(self, lam) -> np.ndarray:
        I1, I2, I3 = stretch_invariants(lam)
        d1, d2, d3 = self._invariant_gradient(I1, I2, I3)
        sq = lam * lam
        return 2.0 * lam * (d1 + d2 * (I1 - sq)) + 2.0 * I3 / lam * d3

    @property
    def shear_modulus(self) -> float:
        """Infinitesimal shear modulus (slope of sigma_12 in simple shear at 0)."""
        return float(self.params["mu"])


class Hencky(ConstitutiveModel):
    """W = mu ||log U||^2 + lam/2 (tr log U)^2."""

    name = "hencky"
    parameter_names = ("mu", "lam")
    capabilities = frozenset({STRETCH_ENERGY, ANALYTIC_STRETCH_GRADIENT})
    iso_vol_split = True
    growth = "logarithmic-squared"

    def __init__(self, mu, lam):
        mu = _positive("mu", mu)
        lam = float(lam)
        if not lam + 2.0 * mu / 3.0 > 0.0:
            raise InvalidParameter("bulk modulus lam + 2 mu / 3 must be positive")
        super().__init__(mu=mu, lam=lam)

    @property
    def kappa(self):
        return self.params["lam"] + 2.0 * self.params["mu"] / 3.0

    def _stretch_energy(self, lam):
        logs = np.log(lam)
        return self.params["mu"] * np.dot(logs, logs) + 0.5 * self.params["lam"] * logs.sum() ** 2

    def _stretch_gradient(self, lam):
        logs = np.log(lam)
        return (2.0 * self.params["mu"] * logs + self.params["lam"] * logs.sum()) / lam


class ExponentiatedHencky(ConstitutiveModel):
    """W = mu/k exp(k ||dev log V||^2) + kappa/(2 khat) exp(khat (tr log V)^2).

    The default k = khat = 0.25 is an arbitrary choice.
    """

    name = "exp_hencky"
    parameter_names = ("mu", "kappa", "k", "khat")
    capabilities = frozenset({STRETCH_ENERGY, ANALYTIC_STRETCH_GRADIENT})
    iso_vol_split = True
    growth = "exponential"

    def __init__(self, mu, kappa, k=0.25, khat=0.25):
        super().__init__(
            mu=_positive("mu", mu), kappa=_positive("kappa", kappa),
            k=_positive("k", k), khat=_positive("khat", khat),
        )

    def _parts(self, lam):
        logs = np.log(lam)
        tr = logs.sum()
        d = logs - tr / 3.0
        return d, tr

    def _stretch_energy(self, lam):
        p = self.params
        d, tr = self._parts(lam)
        return (p["mu"] / p["k"] * math.exp(p["k"] * np.dot(d, d))
                + p["kappa"] / (2.0 * p["khat"]) * math.exp(p["khat"] * tr * tr))

    def _stretch_gradient(self, lam):
        p = self.params
        d, tr = self._parts(lam)
        iso = 2.0 * p["mu"] * math.exp(p["k"] * np.dot(d, d)) * d
        vol = p["kappa"] * math.exp(p["khat"] * tr * tr) * tr
        return (iso + vol) / lam


class Bazant(ConstitutiveModel):
    """W = mu/4 ||B - B^-1||^2 = mu/4 sum (lambda_i^2 - lambda_i^-2)^2."""

    name = "bazant"
    parameter_names = ("mu",)
    capabilities = frozenset({
        STRETCH_ENERGY, INVARIANT_ENERGY, ANALYTIC_STRETCH_GRADIENT, ANALYTIC_INVARIANT_GRADIENT,
    })
    growth = "polynomial"

    def __init__(self, mu):
        super().__init__(mu=_positive("mu", mu))

    @property
    def shear_modulus(self):
        # lambda^2 - lambda^-2 ~ 4 (lambda - 1): the quadratic term is 4 mu ||eps||^2
        return 4.0 * self.params["mu"]

    def _stretch_energy(self, lam):
        sq = lam * lam
        return 0.25 * self.params["mu"] * np.sum((sq - 1.0 / sq) ** 2)

    def _stretch_gradient(self, lam):
        sq = lam * lam
        return self.params["mu"] * (sq - 1.0 / sq) * (lam + 1.0 / (sq * lam))

    def _invariant_energy(self, I1, I2, I3):
        # sum lambda^4 = I1^2 - 2 I2; sum lambda^-4 = (I2/I3)^2 - 2 I1/I3
        return 0.25 * self.params["mu"] * (I1 * I1 - 2.0 * I2 + (I2 / I3) ** 2 - 2.0 * I1 / I3 - 6.0)

    def _invariant_gradient(self, I1, I2, I3):
        m = 0.25 * self.params["mu"]
        return (
            m * (2.0 * I1 - 2.0 / I3),
            m * (-2.0 + 2.0 * I2 / (I3 * I3)),
            m * (-2.0 * I2 * I2 / I3 ** 3 + 2.0 * I1 / (I3 * I3)),
        )


class BlatzKo(ConstitutiveModel):
    """W = mu/2 (I1 + 2/sqrt(I3) - 5)."""

    name = "blatz_ko"
    parameter_names = ("mu",)
    capabilities = frozenset({
        STRETCH_ENERGY, INVARIANT_ENERGY, ANALYTIC_STRETCH_GRADIENT, ANALYTIC_INVARIANT_GRADIENT,
    })
    growth = "quadratic"

    def __init__(self, mu):
        super().__init__(mu=_positive("mu", mu))

    def _stretch_energy(self, lam):
        return 0.5 * self.params["mu"] * (np.dot(lam, lam) + 2.0 / np.prod(lam) - 5.0)

    def _stretch_gradient(self, lam):
        J = np.prod(lam)
        return self.params["mu"] * (lam - 1.0 / (J * lam))

    def _invariant_energy(self, I1, I2, I3):
        return 0.5 * self.params["mu"] * (I1 + 2.0 / math.sqrt(I3) - 5.0)

    def _invariant_gradient(self, I1, I2, I3):
        mu = self.params["mu"]
        return 0.5 * mu, 0.0, -0.5 * mu * I3 ** -1.5


class NeoLog(ConstitutiveModel):
    """W = mu/2 (I1 - log I3), i.e. mu (||F||^2/2 - log det F)."""

    name = "neo_log"
    parameter_names = ("mu",)
    capabilities = frozenset({
        STRETCH_ENERGY, INVARIANT_ENERGY, ANALYTIC_STRETCH_GRADIENT, ANALYTIC_INVARIANT_GRADIENT,
    })
    growth = "quadratic"

    def __init__(self, mu=1.0):
        super().__init__(mu=_positive("mu", mu))

    def _stretch_energy(self, lam):
        return self.params["mu"] * (0.5 * np.dot(lam, lam) - np.sum(np.log(lam)))

    def _stretch_gradient(self, lam):
        return self.params["mu"] * (lam - 1.0 / lam)

    def _invariant_energy(self, I1, I2, I3):
        return 0.5 * self.params["mu"] * (I1 - math.log(I3))

    def _invariant_gradient(self, I1, I2, I3):
        mu = self.params["mu"]
        return 0.5 * mu, 0.0, -0.5 * mu / I3


def _sqrt_quadratic(kappa):
    """f(I3) = kappa (sqrt(I3) - 1)^2 and its derivative."""

    def f(I3):
        return kappa * (math.sqrt(I3) - 1.0) ** 2

    def df(I3):
        r = math.sqrt(I3)
        return kappa * (r - 1.0) / r

    return f, df


class MooneyRivlinTC(ConstitutiveModel):
    """Slightly compressible Mooney-Rivlin energy with a tension-compression
    symmetric isochoric part:

        W = mu/4 ((I1 I3^-1/3 - 3) + (I2 I3^-2/3 - 3)) + f(I3)

    ``kappa`` selects f(I3) = kappa (sqrt(I3) - 1)^2; alternatively pass
    ``f`` and ``df`` callables. Without either, f = 0.
    """

    name = "mooney_rivlin_tc"
    parameter_names = ("mu", "kappa", "f", "df")
    capabilities = frozenset({INVARIANT_ENERGY, ANALYTIC_INVARIANT_GRADIENT})
    iso_vol_split = True
    growth = "quadratic"

    def __init__(self, mu, kappa=None, f: Callable | None = None, df: Callable | None = None):
        params = {"mu": _positive("mu", mu)}
        if kappa is not None:
            if f is not None or df is not None:
                raise InvalidParameter("give either kappa or (f, df), not both")
            params["kappa"] = _positive("kappa", kappa)
            f, df = _sqrt_quadratic(params["kappa"])
        elif (f is None) != (df is None):
            raise InvalidParameter("f and df must be supplied together")
        elif f is not None:
            params.update(f=f, df=df)
        super().__init__(**params)
        self._f = f or (lambda I3: 0.0)
        self._df = df or (lambda I3: 0.0)

    def _invariant_energy(self, I1, I2, I3):
        m = 0.25 * self.params["mu"]
        return m * ((I1 * I3 ** (-1 / 3) - 3.0) + (I2 * I3 ** (-2 / 3) - 3.0)) + self._f(I3)

    def _invariant_gradient(self, I1, I2, I3):
        m = 0.25 * self.params["mu"]
        return (
            m * I3 ** (-1 / 3),
            m * I3 ** (-2 / 3),
            m * (-I1 * I3 ** (-4 / 3) / 3.0 - 2.0 * I2 * I3 ** (-5 / 3) / 3.0) + self._df(I3),
        )


def _vl_terms(kind: str, mu: float):
    if kind == "becker":
        # w'(t) = 2 mu log t
        return (lambda t: 2.0 * mu * (t * (math.log(t) - 1.0) + 1.0),
                lambda t: 2.0 * mu * math.log(t))
    if kind == "log_quadratic":
        return (lambda t: mu * math.log(t) ** 2,
                lambda t: 2.0 * mu * math.log(t) / t)
    if kind == "piecewise":
        # satisfies w'(1/t) = -w'(t) without being tension-compression symmetric
        return (lambda t: mu * ((t - 1.0) ** 2 if t >= 1.0 else 2.0 * (t - math.log(t) - 1.0)),
                lambda t: mu * (2.0 * (t - 1.0) if t >= 1.0 else 2.0 * (1.0 - 1.0 / t)))
    raise InvalidParameter(f"unknown Valanis-Landel term {kind!r}")


class ValanisLandel(ConstitutiveModel):
    """W = sum_i w(lambda_i) + f(lambda_1 lambda_2 lambda_3).

    Either name a built-in ``w`` ("becker", "log_quadratic", "piecewise",
    scaled by ``mu``) or pass callables ``w``/``dw``. The volumetric part is
    f(J) = kappa/2 (log J)^2 when ``kappa`` is given, user ``f``/``df``
    callables, or zero.
    """

    name = "valanis_landel"
    parameter_names = ("mu", "w", "dw", "kappa", "f", "df")
    capabilities = frozenset({STRETCH_ENERGY, ANALYTIC_STRETCH_GRADIENT})
    growth = "user-defined"

    def __init__(self, mu=1.0, w="becker", dw=None, kappa=None, f=None, df=None):
        params = {"mu": _positive("mu", mu)}
        if callable(w):
            if dw is None:
                raise InvalidParameter("a callable w requires its derivative dw")
            params.update(w=w, dw=dw)
            self._w, self._dw = w, dw
        else:
            if dw is not None:
                raise InvalidParameter("dw only applies to a callable w")
            params["w"] = str(w)
            self._w, self._dw = _vl_terms(str(w), params["mu"])
        if kappa is not None:
            if f is not None or df is not None:
                raise InvalidParameter("give either kappa or (f, df), not both")
            k = params["kappa"] = _positive("kappa", kappa)
            self._f = lambda J: 0.5 * k * math.log(J) ** 2
            self._df = lambda J: k * math.log(J) / J
        elif f is not None and df is not None:
            params.update(f=f, df=df)
            self._f, self._df = f, df
        elif f is not None or df is not None:
            raise InvalidParameter("f and df must be supplied together")
        else:
            self._f = self._df = lambda J: 0.0
        super().__init__(**params)

    @property
    def shear_modulus(self):
        return 0.5 * central_difference(self._dw, 1.0, 1e-5)

    def _stretch_energy(self, lam):
        return sum(self._w(float(t)) for t in lam) + self._f(float(np.prod(lam)))

    def _stretch_gradient(self, lam):
        J = float(np.prod(lam))
        dfJ = self._df(J)
        return np.array([self._dw(float(t)) + J / t * dfJ for t in lam])


class Becker(ConstitutiveModel):
    """Becker's law T_Biot = 2 mu log U + lam tr(log U) id.

    Defined directly as a Biot stress law; it is not hyperelastic for
    lam != 0, so ``energy`` is unsupported.
    """

    name = "becker"
    parameter_names = ("mu", "lam")
    capabilities = frozenset({DIRECT_BIOT_LAW})

    def __init__(self, mu, lam=0.0):
        mu = _positive("mu", mu)
        lam = float(lam)
        if not lam + 2.0 * mu / 3.0 > 0.0:
            raise InvalidParameter("bulk modulus lam + 2 mu / 3 must be positive")
        super().__init__(mu=mu, lam=lam)

    def stretch_gradient(self, lambdas):
        # principal Biot stresses
        lam = check_stretches(lambdas)
        logs = np.log(lam)
        return 2.0 * self.params["mu"] * logs + self.params["lam"] * logs.sum()


MODELS = {
    cls.name: cls
    for cls in (Hencky, ExponentiatedHencky, Bazant, BlatzKo, NeoLog, MooneyRivlinTC,
                ValanisLandel, Becker)
}


def catalogue() -> list:
    """Constructors of every built-in model."""
    return list(MODELS.values())


def canonical_name(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    aliases = {"neohooke_log": "neo_log", "neolog": "neo_log", "blatzko": "blatz_ko",
               "mooney_rivlin": "mooney_rivlin_tc", "exponentiated_hencky": "exp_hencky"}
    return aliases.get(key, key)


def make_model(name: str, **params) -> ConstitutiveModel:
    key = canonical_name(name)
    try:
        cls = MODELS[key]
    except KeyError:
        raise InvalidParameter(f"unknown model {name!r}; known: {sorted(MODELS)}") from None
    try:
        return cls(**params)
    except TypeError as exc:
        raise InvalidParameter(f"{key}: {exc}") from None


def model_from_dict(spec: dict) -> ConstitutiveModel:
    """Build a model from {"model": name, "params": {...}}; unknown keys are rejected."""
    if not isinstance(spec, dict):
        raise InvalidParameter("model description must be a JSON object")
    extra = set(spec) - {"model", "params"}
    if extra:
        raise InvalidParameter(f"unknown keys in model description: {sorted(extra)}")
    if "model" not in spec:
        raise InvalidParameter("model description lacks 'model'")
    params = spec.get("params", {})
    if not isinstance(params, dict):
        raise InvalidParameter("'params' must be an object")
    return make_model(spec["model"], **params)


def model_to_dict(model: ConstitutiveModel) -> dict:
    params = {k: v for k, v in model.params.items() if not callable(v)}
    return {"model": model.name, "params": params}
