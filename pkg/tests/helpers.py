"""Shared model instances and independent oracle formulas for the tests."""

import math

import numpy as np

from shearlab.constitutive import (
    Bazant, Becker, BlatzKo, ExponentiatedHencky, Hencky, MooneyRivlinTC, NeoLog, ValanisLandel,
)


def catalogue_models():
    """One instance of every catalogue model, with non-trivial parameters."""
    return [
        Hencky(mu=1.0, lam=1.0),
        ExponentiatedHencky(mu=1.0, kappa=2.0, k=0.5, khat=0.3),
        Bazant(mu=0.7),
        BlatzKo(mu=1.3),
        NeoLog(mu=1.0),
        MooneyRivlinTC(mu=1.0, kappa=1.5),
        ValanisLandel(mu=1.0, w="log_quadratic", kappa=2.0),
        ValanisLandel(mu=0.8, w="becker"),
        Becker(mu=1.0, lam=3.0),
    ]


def energy_models():
    return [m for m in catalogue_models() if m.has_energy]


def random_spd(rng, spread=1.0):
    Q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    return Q @ np.diag(np.exp(rng.uniform(-spread, spread, 3))) @ Q.T


def random_rotation(rng):
    Q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    if np.linalg.det(Q) < 0:
        Q[:, 0] *= -1
    return Q


# oracle energies written straight from the defining formulas
def hencky_energy(lam, mu, Lam):
    logs = [math.log(x) for x in lam]
    return mu * sum(x * x for x in logs) + 0.5 * Lam * sum(logs) ** 2


def bazant_energy(lam, mu):
    return mu / 4 * sum((x * x - 1 / (x * x)) ** 2 for x in lam)


def blatz_ko_energy(lam, mu):
    J = lam[0] * lam[1] * lam[2]
    return mu / 2 * (sum(x * x for x in lam) + 2 / J - 5)


def neo_log_energy(lam, mu):
    return mu / 2 * (sum(x * x for x in lam) - math.log((lam[0] * lam[1] * lam[2]) ** 2))
