"""Command-line harness: ``ctaffect <experiment> [flags]``.

Exit codes: 0 success, 2 invalid configuration, 3 runtime failure.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from pathlib import Path

import yaml

from . import __version__
from .errors import ConfigInvalid, CtAffectError, DimensionError, NoCongruentItems
from .experiments import EXPERIMENTS
from .reporting import render

EXIT_OK, EXIT_CONFIG, EXIT_RUNTIME = 0, 2, 3
SEED_ENV = "CT_AFFECT_SEED"

_ANGLE = re.compile(
    r"^(?P<sign>[+-]?)\s*(?P<coef>\d*\.?\d*(?:[eE][+-]?\d+)?)\s*\*?\s*pi\s*(?:/\s*(?P<den>\d*\.?\d+))?$"
)


def parse_angle(text) -> float:
    """Accept decimals or multiples of pi: ``pi``, ``-pi/2``, ``3pi/4``, ``0.5*pi``, ``1.25``."""
    if isinstance(text, (int, float)):
        return float(text)
    s = str(text).strip().lower().replace("π", "pi")
    m = _ANGLE.match(s)
    if m:
        coef = float(m["coef"]) if m["coef"] not in ("", ".") else 1.0
        den = float(m["den"]) if m["den"] else 1.0
        val = coef * math.pi / den
        return -val if m["sign"] == "-" else val
    try:
        return float(s)
    except ValueError:
        raise ConfigInvalid(f"cannot read angle {text!r}") from None


def parse_grid(text) -> list[float]:
    """``start:stop:count`` (inclusive linspace) or a comma-separated list of angles."""
    if isinstance(text, (list, tuple)):
        return [parse_angle(t) for t in text]
    s = str(text).strip()
    if s.count(":") == 2:
        a, b, n = s.split(":")
        try:
            count = int(n)
        except ValueError:
            raise ConfigInvalid(f"grid count {n!r} is not an integer") from None
        if count < 1:
            raise ConfigInvalid("grid count must be >= 1")
        lo, hi = parse_angle(a), parse_angle(b)
        if count == 1:
            return [lo]
        return [lo + (hi - lo) * k / (count - 1) for k in range(count)]
    return [parse_angle(t) for t in s.split(",") if t.strip()]


def parse_int_list(text) -> list[int]:
    if isinstance(text, (list, tuple)):
        return [int(t) for t in text]
    try:
        return [int(t) for t in str(text).split(",") if t.strip()]
    except ValueError:
        raise ConfigInvalid(f"cannot read item list {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ctaffect", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--list", action="store_true", help="list experiments and exit")
    sub = p.add_subparsers(dest="experiment", metavar="EXPERIMENT")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML or JSON file with flag values; flags override it")
    common.add_argument("--out", help="directory for JSON/CSV artifacts (default: JSON to stdout)")
    common.add_argument("--seed", type=int, default=None, help=f"random seed (default ${SEED_ENV})")

    def add(name, help):
        return sub.add_parser(name, parents=[common], help=help, argument_default=argparse.SUPPRESS)

    medium = dict(choices=["classical", "coherent"])

    s = add("classify-medium", "superinformation decider, decision conditions, infusion regime")
    s.add_argument("--medium", **medium)

    s = add("conjunction", "conjunction inequalities over sampled states")
    s.add_argument("--medium", **medium)
    s.add_argument("--states", type=int, help="number of random states added to the named ones")

    s = add("e1e2", "independence property under sharp vs mixed affect")
    s.add_argument("--medium", **medium)
    s.add_argument("--mixtures", type=int, help="number of random mixtures (classical default 1000)")

    s = add("symmetry", "J(x|a) against J(a|x)")
    s.add_argument("--medium", **medium)
    s.add_argument("--jx", type=float, help="classical J(x0)")
    s.add_argument("--ja", type=float, help="classical J(a+)")
    s.add_argument("--jxa", type=float, help="classical joint J(x0, a+)")

    s = add("wfw-scan", "X partition of W~ F(phi) W x0 over a phase grid")
    s.add_argument("--phi-grid", dest="phi_grid", help="start:stop:count or comma list (default 0:2pi:9)")

    s = add("grover", "success trace of generalized amplitude amplification")
    s.add_argument("--N", type=int)
    s.add_argument("--M", type=int, help="mark items 0..M-1")
    s.add_argument("--marked", help="comma-separated marked items (overrides --M)")
    s.add_argument("--theta", help="phase on the prepared state")
    s.add_argument("--phi", help="phase on the marked set")
    s.add_argument("--iters", type=int)

    s = add("grover-scan", "peak success over a (theta, phi) grid")
    s.add_argument("--N", type=int)
    s.add_argument("--M", type=int)
    s.add_argument("--grid-size", dest="grid_size", type=int, help="points per axis on [0, 2pi] (default 11)")
    s.add_argument("--theta-grid", dest="theta_grid")
    s.add_argument("--phi-grid", dest="phi_grid")
    s.add_argument("--jobs", type=int, help="parallel workers")

    s = add("mood-demo", "mood-congruent recall via amplitude amplification")
    s.add_argument("--N", type=int)
    s.add_argument("--tags", help="string of +/- valence tags, one per item")
    s.add_argument("--mood", choices=["+", "-"])
    s.add_argument("--theta")
    s.add_argument("--phi")
    s.add_argument("--iters", type=int)
    return p


_CONVERT = {
    "theta": parse_angle,
    "phi": parse_angle,
    "phi_grid": parse_grid,
    "theta_grid": parse_grid,
    "marked": parse_int_list,
}


def _load_config(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
        data = json.loads(text) if path.endswith(".json") else yaml.safe_load(text)
    except (OSError, json.JSONDecodeError, yaml.YAMLError) as exc:
        raise ConfigInvalid(f"cannot read config {path}: {exc}") from None
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigInvalid("config file must hold a mapping")
    return {str(k).replace("-", "_"): v for k, v in data.items()}


def resolve_params(args: argparse.Namespace) -> dict:
    flags = {k: v for k, v in vars(args).items() if k not in ("experiment", "list", "config", "out")}
    params = _load_config(args.config) if getattr(args, "config", None) else {}
    params.pop("experiment", None)
    params.update({k: v for k, v in flags.items() if v is not None})
    if params.get("seed") is None and os.environ.get(SEED_ENV):
        try:
            params["seed"] = int(os.environ[SEED_ENV])
        except ValueError:
            raise ConfigInvalid(f"{SEED_ENV} must be an integer") from None
    for key, fn in _CONVERT.items():
        if key in params and params[key] is not None:
            params[key] = fn(params[key])
    return params


def run_experiment(name: str, params: dict, out: str | None = None, stdout=None) -> list[Path]:
    """Run one experiment and write its artifacts; returns the written paths."""
    stdout = sys.stdout if stdout is None else stdout
    fn = EXPERIMENTS[name]
    try:
        artifacts = fn(**params)
    except TypeError as exc:
        raise ConfigInvalid(str(exc)) from None
    written = []
    for art in artifacts:
        text = render(art.payload, art.format)
        if out is None:
            if art.format == "json":
                stdout.write(text)
            continue
        path = Path(out) / f"{art.name}.{art.format}"
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        written.append(path)
    return written


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.list:
        for name, fn in EXPERIMENTS.items():
            print(f"{name}\t{fn.__module__}.{fn.__name__}")
        return EXIT_OK
    if not args.experiment:
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG
    try:
        params = resolve_params(args)
        run_experiment(args.experiment, params, getattr(args, "out", None))
    except (ConfigInvalid, DimensionError, NoCongruentItems) as exc:
        print(f"ctaffect: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (CtAffectError, OSError, ArithmeticError) as exc:
        print(f"ctaffect: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except ValueError as exc:
        print(f"ctaffect: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
