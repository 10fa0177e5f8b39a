"""
Command-line front end.

    lsfcolloc solve --model sextic3d --N 18,20 --k 3 --check
    lsfcolloc solve --potential my.pot --N 20 --strategy aniso --format csv
    lsfcolloc models

Exit status: 0 success, 1 reference mismatch, 2 bad configuration,
3 optimizer or eigensolver failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import potential as _pot
from .eigensolver import DEFAULT_SEED, EigenRequest
from .errors import ConvergenceError, LSFError, OptimizationError, ParseError
from .reference import reference_levels, reference_values
from .solver import solve

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_SOLVER = 0, 1, 2, 3
THREADS_ENV = "LSFCOLLOC_THREADS"
STRATEGIES = ("scale", "aniso", "rot")
FORMATS = ("text", "csv", "json")
CSV_COLUMNS = ("model", "grid", "level", "energy", "reference", "abs_error")

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class ConfigError(LSFError, ValueError):
    pass


@dataclass
class RunConfig:
    model: str | None = None
    potential: str | None = None
    param: float | None = None
    grids: list = field(default_factory=list)
    k: int = 1
    strategy: str = "scale"
    tolerance: float = 1e-6
    output_format: str = "text"
    check: bool = False
    levels: str = "auto"
    seed: int = DEFAULT_SEED

    def validate(self):
        if (self.model is None) == (self.potential is None):
            raise ConfigError("give exactly one of --model or --potential")
        if self.model is not None and self.model not in _pot.BUILTINS:
            raise ConfigError(f"unknown model {self.model!r}; try 'lsfcolloc models'")
        if not self.grids:
            raise ConfigError("at least one grid size N is required")
        for n in self.grids:
            if n < 4 or n % 2:
                raise ConfigError(f"N must be an even integer >= 4, got {n}")
        if self.k < 1:
            raise ConfigError(f"k must be >= 1, got {self.k}")
        if self.strategy not in STRATEGIES:
            raise ConfigError(f"strategy must be one of {STRATEGIES}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if self.levels not in ("auto", "all", "distinct"):
            raise ConfigError("levels must be auto, all or distinct")
        if not (self.tolerance > 0):
            raise ConfigError("tolerance must be positive")
        if self.check and self.model is None:
            raise ConfigError("--check needs a built-in model")
        return self


def parse_grid_list(text) -> list:
    try:
        return [int(tok) for tok in str(text).replace(" ", "").split(",") if tok]
    except ValueError:
        raise ConfigError(f"cannot parse grid sizes {text!r}") from None


def read_config_file(path) -> dict:
    """``key = value`` lines; ``#`` comments; keys match the long flags."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.lower().replace("-", "_")] = value
    return out


_BOOL = {"1": True, "true": True, "yes": True, "on": True,
         "0": False, "false": False, "no": False, "off": False}


def _config_from(values: dict) -> RunConfig:
    cfg = RunConfig()
    conv = {
        "model": str, "potential": str, "param": float, "k": int,
        "strategy": str, "tol": float, "tolerance": float, "format": str,
        "levels": str, "seed": lambda s: int(str(s), 0),
    }
    attr = {"tol": "tolerance", "format": "output_format"}
    for key, value in values.items():
        if value is None:
            continue
        if key in ("n", "grids"):
            cfg.grids = value if isinstance(value, list) else parse_grid_list(value)
        elif key == "check":
            cfg.check = value if isinstance(value, bool) else _BOOL.get(str(value).lower())
            if cfg.check is None:
                raise ConfigError(f"bad boolean for check: {value!r}")
        elif key in conv:
            try:
                setattr(cfg, attr.get(key, key), conv[key](value))
            except ValueError:
                raise ConfigError(f"bad value for {key}: {value!r}") from None
        else:
            raise ConfigError(f"unknown configuration key {key!r}")
    return cfg


def _grid_label(n, dims, unicode=True):
    m = n - 1
    if unicode:
        p = f"{m}{str(dims).translate(_SUPERSCRIPT)}"
        return f"{p} × {p}"
    return f"{m}^{dims}"


def _fmt(x):
    return f"{x:.10g}"


@dataclass
class Row:
    n: int
    solution: object
    reference: list | None = None


def _resolve_levels(cfg: RunConfig):
    if cfg.levels != "auto":
        return cfg.levels
    if cfg.model is None:
        return "all"
    try:
        rows = reference_values(cfg.model, _model_param(cfg))
    except LookupError:
        return "all"
    return rows[0].listing if rows else "all"


def _model_param(cfg):
    if cfg.model is None:
        return None
    return cfg.param if cfg.param is not None else _pot.builtin_default_param(cfg.model)


def _reference_for(cfg, n):
    ref, _ = reference_levels(cfg.model, _model_param(cfg), cfg.strategy, n=n)
    return None if ref is None else ref[:cfg.k]


def _thread_count(jobs):
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, min(jobs, int(env)))
        except ValueError:
            raise ConfigError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return 1


def run(cfg: RunConfig, out=None) -> int:
    """Solve every grid in ``cfg`` and write the report; returns the exit code."""
    out = out or sys.stdout
    try:
        cfg.validate()
        pot = (_pot.builtin(cfg.model, cfg.param) if cfg.model
               else _pot.parse_potential_file(cfg.potential))
        levels = _resolve_levels(cfg)
    except (ConfigError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    request = EigenRequest(how_many=cfg.k, seed=cfg.seed)

    def one(n):
        return solve(pot, n, cfg.k, cfg.strategy, levels=levels, request=request)

    try:
        workers = _thread_count(len(cfg.grids))
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                solutions = list(pool.map(one, cfg.grids))
        else:
            solutions = [one(n) for n in cfg.grids]
    except (ConvergenceError, OptimizationError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    rows = [Row(n, s, _reference_for(cfg, n) if cfg.check else None)
            for n, s in zip(cfg.grids, solutions)]
    name = cfg.model or os.path.basename(cfg.potential)
    writer = {"text": write_text, "csv": write_csv, "json": write_json}[cfg.output_format]
    writer(out, name, cfg, levels, pot.dims, rows)

    if not cfg.check:
        return EXIT_OK
    checked = 0
    ok = True
    for row in rows:
        if row.reference is None:
            continue
        for e, r in zip(row.solution.eigenvalues, row.reference):
            checked += 1
            ok &= abs(e - r) <= cfg.tolerance
    if checked == 0:
        print("warning: no reference values for the requested grids", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def write_text(out, name, cfg, levels, dims, rows):
    k = cfg.k
    print(f"# model: {name}   strategy: {cfg.strategy}   levels: {levels}", file=out)
    header = ["grid".ljust(16)] + [f"E{i}".ljust(16) for i in range(k)]
    print("".join(header).rstrip(), file=out)
    for row in rows:
        label = _grid_label(row.n, dims).ljust(16)
        print(label + "".join(_fmt(e).ljust(16) for e in row.solution.eigenvalues).rstrip(),
              file=out)
    if cfg.check:
        for row in rows:
            label = _grid_label(row.n, dims)
            if row.reference is None:
                print(f"{('ref ' + label).ljust(16)}(none)", file=out)
                continue
            print(("ref " + label).ljust(16)
                  + "".join(_fmt(r).ljust(16) for r in row.reference).rstrip(), file=out)
            diffs = [abs(e - r) for e, r in zip(row.solution.eigenvalues, row.reference)]
            print("|diff|".ljust(16) + "".join(f"{d:.3e}".ljust(16) for d in diffs).rstrip(),
                  file=out)
    params = "; ".join(f"{_grid_label(r.n, dims)}: {_param_text(r.solution.params)}" for r in rows)
    print(f"# parameters  {params}", file=out)


def _param_text(p):
    parts = [f"L={p.half_width:.6g}"]
    if p.axis_scales:
        parts.append("sigma=(" + ", ".join(f"{s:.6g}" for s in p.axis_scales) + ")")
    if p.angles:
        parts.append("theta=(" + ", ".join(f"{a:.6g}" for a in p.angles) + ")")
    return " ".join(parts)


def _csv_records(name, dims, rows):
    for row in rows:
        for level, e in enumerate(row.solution.eigenvalues):
            ref = row.reference[level] if row.reference and level < len(row.reference) else None
            yield {
                "model": name,
                "grid": _grid_label(row.n, dims, unicode=False),
                "level": level,
                "energy": _fmt(e),
                "reference": "" if ref is None else repr(ref),
                "abs_error": "" if ref is None else f"{abs(e - ref):.3e}",
            }


def write_csv(out, name, cfg, levels, dims, rows):
    w = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for rec in _csv_records(name, dims, rows):
        w.writerow(rec)


def write_json(out, name, cfg, levels, dims, rows):
    doc = {
        "model": name,
        "strategy": cfg.strategy,
        "levels": levels,
        "results": [],
    }
    for row in rows:
        s = row.solution
        p = s.params
        item = {
            "N": row.n,
            "grid": _grid_label(row.n, dims, unicode=False),
            "energies": [float(e) for e in s.eigenvalues],
            "residual_norms": [float(r) for r in s.residual_norms],
            "params": {"L": p.half_width, "axis_scales": list(p.axis_scales),
                       "angles": list(p.angles)},
        }
        if row.reference is not None:
            item["reference"] = list(row.reference)
            item["abs_error"] = [abs(e - r) for e, r in zip(s.eigenvalues, row.reference)]
        doc["results"].append(item)
    json.dump(doc, out, indent=2)
    out.write("\n")


def _ascii_label(label):
    digits = {c: str(i) for i, c in enumerate("⁰¹²³⁴⁵⁶⁷⁸⁹")}
    base = "".join(ch for ch in label if ch not in digits)
    power = "".join(digits[ch] for ch in label if ch in digits)
    return f"{base}^{power}"


def parse_text_report(text):
    """``{"17^3": [E0, E1, ...]}`` from a text report; the inverse of :func:`write_text`."""
    result = {}
    for line in text.splitlines():
        if not line or line.startswith(("#", "grid", "ref", "|diff|")):
            continue
        cols = line.split()
        result[_ascii_label(cols[0])] = [float(x) for x in cols[3:]]
    return result


def build_parser():
    p = argparse.ArgumentParser(prog="lsfcolloc", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("solve", help="solve one model on one or more grids")
    s.add_argument("--config", help="key = value configuration file")
    s.add_argument("--model", help="built-in model name")
    s.add_argument("--potential", help="potential file, one 'coeff e1 .. eD' per line")
    s.add_argument("--param", type=float, help="model parameter (kappa or lambda)")
    s.add_argument("--N", dest="n", help="comma-separated even grid sizes, e.g. 18,20")
    s.add_argument("--k", type=int, help="number of levels")
    s.add_argument("--strategy", choices=STRATEGIES)
    s.add_argument("--tol", type=float, help="reference-check tolerance (default 1e-6)")
    s.add_argument("--format", choices=FORMATS)
    s.add_argument("--levels", choices=("auto", "all", "distinct"),
                   help="report every eigenvalue or only distinct levels")
    s.add_argument("--seed", type=lambda t: int(t, 0))
    s.add_argument("--check", action="store_true", default=None,
                   help="compare with embedded reference values")
    sub.add_parser("models", help="list built-in models")
    r = sub.add_parser("reference", help="print embedded reference values")
    r.add_argument("model")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "models":
        for name in sorted(_pot.BUILTINS):
            default = _pot.builtin_default_param(name)
            extra = "" if default is None else f"  (default param {default:g})"
            print(f"{name}{extra}")
        return EXIT_OK
    if args.command == "reference":
        try:
            rows = reference_values(args.model)
        except LookupError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        for r in rows:
            param = "" if r.param is None else f"{r.param:g}"
            print(f"{r.model}\t{param}\t{r.strategy}\t{r.label}\tE{r.level}\t{r.value!r}\t{r.source}")
        return EXIT_OK
    try:
        values = read_config_file(args.config) if args.config else {}
        cli = {"model": args.model, "potential": args.potential, "param": args.param,
               "n": args.n, "k": args.k, "strategy": args.strategy, "tol": args.tol,
               "format": args.format, "levels": args.levels, "seed": args.seed,
               "check": args.check}
        values.update({k: v for k, v in cli.items() if v is not None})
        cfg = _config_from(values)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
