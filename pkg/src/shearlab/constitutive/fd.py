"""Central finite differences used as a gradient fallback and as a test oracle."""

from __future__ import annotations

import math

import numpy as np

from ..errors import NonFinite

REL_STEP = 1e-6
MIN_STEP = 1e-6


def _step(x: float, rel_step: float) -> float:
    return max(MIN_STEP, rel_step * abs(x))


def _call(fun, x) -> float:
    try:
        value = float(fun(x))
    except (ArithmeticError, ValueError) as exc:
        raise NonFinite(f"evaluation failed at {x}: {exc}") from exc
    if not math.isfinite(value):
        raise NonFinite(f"non-finite value at {x}")
    return value


def central_difference(fun, x: float, h: float, richardson: bool = False) -> float:
    """Derivative of a scalar function of one variable."""
    d = (_call(fun, x + h) - _call(fun, x - h)) / (2.0 * h)
    if richardson:
        half = (_call(fun, x + 0.5 * h) - _call(fun, x - 0.5 * h)) / h
        d = (4.0 * half - d) / 3.0
    return d


def second_difference(fun, x: float, h: float) -> float:
    return (_call(fun, x + h) - 2.0 * _call(fun, x) + _call(fun, x - h)) / (h * h)


def fd_gradient(fun, point, kind: str = "stretch", richardson: bool = False,
                rel_step: float = REL_STEP) -> np.ndarray:
    """Gradient of ``fun`` at ``point`` by per-coordinate central differences.

    ``kind`` is "stretch" (principal stretches, all positive) or "invariant"
    (I1, I2, I3). The step is max(1e-6, 1e-6 |x_i|); for stretches it is
    capped so that the stencil stays inside the positive orthant.
    """
    if kind not in ("stretch", "invariant"):
        raise ValueError(f"unknown gradient kind {kind!r}")
    x0 = np.array(point, dtype=float)
    grad = np.empty_like(x0)
    for i in range(x0.size):
        h = _step(x0[i], rel_step)
        if kind == "stretch":
            h = min(h, 0.25 * x0[i])

        def partial(t, i=i):
            x = x0.copy()
            x[i] = t
            return fun(x)

        grad[i] = central_difference(partial, x0[i], h, richardson)
    return grad
