"""``cim`` command-line front end.

Exit status: 0 on success, 1 on I/O failure, 2 on a configuration error,
3 when ``--strict`` is set and any cell failed numerically.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

from .sweep import (
    ConfigError,
    Format,
    Quantity,
    SweepConfig,
    default_threads,
    emit,
    figure_recipes,
    get_recipe,
    run_sweep,
)

EXIT_OK, EXIT_IO, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3

_GRID_KEYS = {"lambda": "lambda_grid", "beta": "beta_grid", "r": "r_or_L_grid", "L": "r_or_L_grid",
              "N": "N_grid", "h": "h_grid", "p": "p_grid"}


def _number(tok: str, cast):
    tok = tok.strip()
    if cast is float and tok.lower() in ("inf", "infinity", "+inf"):
        return math.inf
    return cast(tok)


def parse_grid(spec, cast=float) -> tuple:
    """Parse ``a:b:step`` (inclusive), ``a,b,c`` or a single value.

    Lists in a JSON config file are accepted as-is.
    """
    if isinstance(spec, (list, tuple)):
        return tuple(cast(v) if not (isinstance(v, str)) else _number(v, cast) for v in spec)
    if isinstance(spec, (int, float)):
        return (cast(spec),)
    spec = str(spec).strip()
    try:
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise ValueError("range must be a:b:step")
            a, b, step = (_number(p, float) for p in parts)
            if not step > 0 or b < a or not all(map(math.isfinite, (a, b, step))):
                raise ValueError("need finite a <= b and step > 0")
            n = int(math.floor((b - a) / step + 1e-9)) + 1
            vals = [round(a + i * step, 12) for i in range(n)]
            return tuple(cast(v) for v in vals)
        return tuple(_number(t, cast) for t in spec.split(",") if t.strip())
    except ValueError as exc:
        raise ConfigError(f"bad grid {spec!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cim",
        description="Parameter sweeps for the one-dimensional cluster-Ising chain.",
        epilog="Quantities: " + ", ".join(q.value for q in Quantity)
        + ". Recipes: " + ", ".join(r.name for r in figure_recipes()) + ".",
    )
    p.add_argument("target", nargs="?", help="quantity or figure recipe name")
    p.add_argument("--config", help="JSON config file; command-line flags override its fields")
    p.add_argument("--lambda", dest="lambda_", metavar="GRID", help="coupling grid, a:b:step or list")
    p.add_argument("--beta", metavar="GRID", help="inverse temperatures ('inf' for T = 0)")
    p.add_argument("--r", metavar="GRID", help="separations")
    p.add_argument("--L", metavar="GRID", help="block lengths")
    p.add_argument("--N", metavar="GRID", help="chain sizes for exact diagonalization")
    p.add_argument("--h", metavar="GRID", help="staggered field strengths")
    p.add_argument("--p", metavar="GRID", help="momenta for the dispersion")
    p.add_argument("--option", action="append", default=[], metavar="KEY=JSON",
                   help="quantity option, e.g. ed_mode=\"scaling\"")
    p.add_argument("--format", choices=[f.value for f in Format])
    p.add_argument("--out", help="output file (directory for multi-table recipes); stdout if omitted")
    p.add_argument("--strict", action="store_true", default=None,
                   help="exit with status 3 if any cell fails")
    p.add_argument("--threads", type=int, help="worker threads (default: $CIM_THREADS or 1)")
    p.add_argument("--list", action="store_true", help="list quantities and recipes and exit")
    return p


def _load_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    return data


def _merge(args) -> dict:
    """Config-file fields overridden by explicit flags."""
    conf = _load_file(args.config) if args.config else {}
    flags = {"target": args.target, "lambda": args.lambda_, "beta": args.beta, "r": args.r, "L": args.L,
             "N": args.N, "h": args.h, "p": args.p, "format": args.format, "out": args.out,
             "strict": args.strict, "threads": args.threads}
    if "quantity" in conf and "target" not in conf:
        conf["target"] = conf.pop("quantity")
    for k, v in flags.items():
        if v is not None:
            conf[k] = v
    opts = dict(conf.get("options", {}))
    for item in args.option:
        key, _, raw = item.partition("=")
        if not key or not raw:
            raise ConfigError(f"--option expects KEY=JSON, got {item!r}")
        try:
            opts[key] = json.loads(raw)
        except json.JSONDecodeError:
            opts[key] = raw
    conf["options"] = opts
    unknown = set(conf) - {"target", "lambda", "beta", "r", "L", "N", "h", "p", "format", "out",
                           "strict", "threads", "options"}
    if unknown:
        raise ConfigError(f"unknown config fields: {sorted(unknown)}")
    return conf


def _configs(conf: dict) -> tuple[str, list[SweepConfig]]:
    target = conf.get("target")
    if not target:
        raise ConfigError("no quantity or recipe given")
    fmt = conf.get("format", "csv")
    grids = {}
    for key in ("lambda", "beta", "r", "L", "N", "h", "p"):
        if conf.get(key) is not None:
            cast = int if key in ("r", "L", "N") else float
            grids[_GRID_KEYS[key]] = parse_grid(conf[key], cast)
    if conf.get("r") is not None and conf.get("L") is not None:
        raise ConfigError("--r and --L share one grid; give only one")
    if target in {q.value for q in Quantity}:
        return target, [SweepConfig(Quantity(target), format=fmt, options=conf["options"], **grids)]
    recipe = get_recipe(target)
    out = []
    for cfg in recipe.configs:
        fields = {k: getattr(cfg, k) for k in ("lambda_grid", "beta_grid", "r_or_L_grid", "N_grid",
                                               "h_grid", "p_grid")}
        fields.update(grids)
        out.append(SweepConfig(cfg.quantity, format=fmt, options={**cfg.options, **conf["options"]},
                               **fields))
    return target, out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list:
        for q in Quantity:
            print(q.value)
        for r in figure_recipes():
            print(f"{r.name}\t{r.description}")
        return EXIT_OK
    try:
        conf = _merge(args)
        target, configs = _configs(conf)
        threads = conf.get("threads")
        try:
            threads = default_threads() if threads is None else int(threads)
        except (TypeError, ValueError):
            raise ConfigError(f"threads must be an integer, got {threads!r}") from None
        if threads < 1:
            raise ConfigError("--threads must be >= 1")
    except ConfigError as exc:
        print(f"cim: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    out = conf.get("out")
    failed = 0
    try:
        if out and len(configs) > 1:
            os.makedirs(out, exist_ok=True)
        for i, cfg in enumerate(configs):
            started = time.time()
            if out is None:
                if len(configs) > 1:
                    sys.stdout.write(("\n" if i else "") + f"# {target}/{cfg.quantity.value}\n")
                records = list(run_sweep(cfg, threads))
                emit(records, cfg.format, sys.stdout)
            else:
                path = out if len(configs) == 1 else os.path.join(
                    out, f"{target}_{i}_{cfg.quantity.value}.{cfg.format.value}")
                records = list(run_sweep(cfg, threads))
                emit(records, cfg.format, path, cfg, started)
            failed += sum(r.error is not None for r in records)
    except OSError as exc:
        print(f"cim: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    if failed:
        print(f"cim: {failed} cell(s) failed; see the error column", file=sys.stderr)
        if conf.get("strict"):
            return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
