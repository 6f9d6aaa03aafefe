"""shearlab command line.

Examples:
  shearlab sweep --model hencky --param mu=1 --param lam=1 --family pure-shear-stretch \
      --min -1 --max 1 --steps 11
  shearlab invert --model neolog.json --s 1
  shearlab linearize left-finite-shear --alphas 1e-1,1e-2,1e-3

Exit codes: 0 pass, 1 analytic failure or non-convergence, 2 usage error,
3 model error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (
    audit,
    classify_effects,
    invert_pure_shear,
    is_pure_shear_stress,
    shear_monotonicity,
)
from .constitutive import catalogue, cauchy_stress, make_model, model_from_dict, model_to_dict
from .errors import NonConvergence, ShearLabError, UnsupportedParameterization
from .kinematics import (
    left_finite_shear,
    linearization_residual,
    loglog_slope,
    pure_shear_stretch,
    right_finite_shear,
    shear_rotation,
    simple_shear,
)
from .report import dumps_csv, dumps_json

log = logging.getLogger("shearlab")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MODEL = 0, 1, 2, 3

FAMILIES = {
    "simple-shear": simple_shear,
    "left-finite-shear": left_finite_shear,
    "right-finite-shear": right_finite_shear,
    "pure-shear-stretch": pure_shear_stretch,
}
# names accepted by `linearize`, mapped onto kinematics.linearization_residual
LINEARIZE_FAMILIES = {
    "left-finite-shear": "left",
    "right-finite-shear": "right",
    "pure-shear-stretch": "stretch",
    "shear-rotation": "rotation",
}
SLOPE_TARGET, SLOPE_TOL = 2.0, 0.05

SWEEP_COLUMNS = (
    ["param"]
    + [f"F{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)]
    + ["sigma11", "sigma12", "sigma13", "sigma22", "sigma23", "sigma33"]
    + ["pure", "s", "residual", "B11", "detB", "B33", "poynting", "kelvin", "planar"]
)
_SIGMA_IDX = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


class UsageError(Exception):
    pass


class ModelError(Exception):
    pass


def _parse_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def parse_params(items) -> dict:
    params = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {item!r}")
        params[key.strip()] = _parse_value(value.strip())
    return params


def load_model(spec: str | None, params: dict):
    """--model is a JSON file ({"model": ..., "params": {...}}) or a model name;
    --param values override the file's params."""
    if not spec:
        raise UsageError("--model is required")
    try:
        path = Path(spec)
        if path.suffix == ".json" or path.is_file():
            try:
                desc = json.loads(path.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise ModelError(f"cannot read model file {spec}: {exc}") from None
            if isinstance(desc, dict) and params:
                desc = {**desc, "params": {**desc.get("params", {}), **params}}
            return model_from_dict(desc)
        return make_model(spec, **params)
    except ShearLabError as exc:
        raise ModelError(str(exc)) from None


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _grid(args, default_steps=None) -> np.ndarray:
    if args.min is None or args.max is None:
        raise UsageError("--min and --max are required")
    steps = args.steps if args.steps is not None else default_steps
    if steps is None or steps < 2:
        raise UsageError("--steps must be at least 2")
    if not args.min < args.max:
        raise UsageError("--min must be smaller than --max")
    return np.linspace(args.min, args.max, steps)


def sweep_rows(model, family: str, grid, tol=None) -> list:
    deform = FAMILIES[family]
    rows = []
    for t in grid:
        t = float(t)
        F = deform(t)
        sigma = cauchy_stress(model, F)
        purity = is_pure_shear_stress(sigma, tol)
        eff = classify_effects(F @ F.T)
        rows.append(
            [t]
            + [float(x) for x in F.ravel()]
            + [float(sigma[i, j]) for i, j in _SIGMA_IDX]
            + [purity.is_pure_shear, purity.s, purity.residual,
               eff.b11, eff.detB, eff.b33, eff.poynting, eff.kelvin, eff.planar]
        )
    return rows


def cmd_sweep(args) -> int:
    if args.family not in FAMILIES:
        raise UsageError(f"--family must be one of {sorted(FAMILIES)}")
    grid = _grid(args)
    model = load_model(args.model, parse_params(args.param))
    rows = sweep_rows(model, args.family, grid, args.tol)
    if args.format == "csv":
        text = dumps_csv(SWEEP_COLUMNS, rows)
    else:
        text = dumps_json({
            "model": model_to_dict(model),
            "family": args.family,
            "columns": SWEEP_COLUMNS,
            "rows": [dict(zip(SWEEP_COLUMNS, r)) for r in rows],
        })
    _emit(text, args.out)
    return EXIT_OK


def cmd_audit(args) -> int:
    model = load_model(args.model, parse_params(args.param))
    report = audit(model, seed=args.seed)
    _emit(dumps_json(report), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_invert(args) -> int:
    if args.s is None:
        raise UsageError("--s is required")
    model = load_model(args.model, parse_params(args.param))
    kwargs = {} if args.tol is None else {"tol": args.tol}
    result = invert_pure_shear(model, args.s, **kwargs)
    _emit(dumps_json({"model": model_to_dict(model), "result": result}), args.out)
    return EXIT_OK if result.converged else EXIT_FAIL


def cmd_monotonicity(args) -> int:
    if args.min is None and args.max is None:
        args.min, args.max = 0.0, 2.0
    grid = _grid(args, default_steps=41)
    model = load_model(args.model, parse_params(args.param))
    report = shear_monotonicity(model, grid)
    if args.format == "csv":
        text = dumps_csv(["gamma", "sigma12", "dsigma12", "g2"], report.rows)
    else:
        text = dumps_json(report)
    _emit(text, args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_linearize(args) -> int:
    if args.family not in LINEARIZE_FAMILIES:
        raise UsageError(f"family must be one of {sorted(LINEARIZE_FAMILIES)}")
    try:
        alphas = [float(a) for a in args.alphas.split(",") if a.strip()]
    except ValueError:
        raise UsageError(f"--alphas must be a comma separated list of numbers, got {args.alphas!r}") from None
    if len(alphas) < 2 or any(a == 0 for a in alphas):
        raise UsageError("--alphas needs at least two nonzero values")
    key = LINEARIZE_FAMILIES[args.family]
    slope = loglog_slope(alphas, key)
    passed = abs(slope - SLOPE_TARGET) <= SLOPE_TOL
    _emit(dumps_json({
        "family": args.family,
        "alphas": alphas,
        "residuals": [linearization_residual(a, key) for a in alphas],
        "slope": slope,
        "target": SLOPE_TARGET,
        "tol": SLOPE_TOL,
        "passed": passed,
    }), args.out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_models(args) -> int:
    entries = []
    for cls in catalogue():
        entries.append({
            "name": cls.name,
            "parameters": list(cls.parameter_names),
            "capabilities": sorted(cls.capabilities),
            "iso_vol_split": cls.iso_vol_split,
            "growth": cls.growth,
        })
    if args.format == "csv":
        rows = [[e["name"], " ".join(e["parameters"]), " ".join(e["capabilities"]),
                 e["iso_vol_split"], e["growth"]] for e in entries]
        text = dumps_csv(["name", "parameters", "capabilities", "iso_vol_split", "growth"], rows)
    else:
        text = dumps_json(entries)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shearlab", description="Shear analysis for isotropic finite elasticity.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true", help="log solver progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def model_opts(p):
        p.add_argument("--model", help="model name or JSON file")
        p.add_argument("--param", action="append", metavar="K=V", help="model parameter (repeatable)")

    def out_opts(p, formats=True):
        p.add_argument("--out", help="write to this path instead of stdout")
        if formats:
            p.add_argument("--format", choices=("csv", "json"), default="csv")

    def range_opts(p):
        p.add_argument("--min", type=float)
        p.add_argument("--max", type=float)
        p.add_argument("--steps", type=int)

    p = sub.add_parser("sweep", help="stress and effect table along a deformation family")
    model_opts(p)
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    range_opts(p)
    p.add_argument("--tol", type=float, help="purity tolerance (default 1e-10 (1 + |sigma|))")
    out_opts(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("audit", help="compatibility audit of a model (JSON)")
    model_opts(p)
    p.add_argument("--seed", type=int, default=0)
    out_opts(p, formats=False)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("invert", help="solve sigma(B) = s (e1 e2 + e2 e1) for B (JSON)")
    model_opts(p)
    p.add_argument("--s", type=float)
    p.add_argument("--tol", type=float)
    out_opts(p, formats=False)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("monotonicity", help="sigma_12 along simple shear")
    model_opts(p)
    range_opts(p)
    out_opts(p)
    p.set_defaults(func=cmd_monotonicity, format="json")

    p = sub.add_parser("linearize", help="log-log slope of a family's first-order remainder")
    p.add_argument("family", help=f"one of {', '.join(sorted(LINEARIZE_FAMILIES))}")
    p.add_argument("--alphas", default="1e-1,1e-2,1e-3,1e-4")
    out_opts(p, formats=False)
    p.set_defaults(func=cmd_linearize)

    p = sub.add_parser("models", help="list the model catalogue")
    out_opts(p)
    p.set_defaults(func=cmd_models, format="json")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"shearlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergence as exc:
        print(f"shearlab: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ModelError, UnsupportedParameterization, ShearLabError) as exc:
        print(f"shearlab: model error: {exc}", file=sys.stderr)
        return EXIT_MODEL


if __name__ == "__main__":
    raise SystemExit(main())
