"""Parameter sweeps over every library operation, and their serialization.

A :class:`SweepConfig` names one quantity plus the grids it needs.
:func:`run_sweep` evaluates the grid cell by cell (optionally in a thread
pool) and yields :class:`ResultRecord` objects ordered by input
coordinates. :func:`emit` writes them as CSV or JSON with 17 significant
digits; timestamps go to a sidecar manifest so data files are
byte-for-byte reproducible.
"""

from __future__ import annotations

import enum
import io
import itertools
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from importlib import metadata
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from . import correlations, entanglement, exact_diag, model_core, order_params, thermodynamics
from .errors import CIMError, DomainError
from .model_core import Boundary, ModelParams

try:
    TOOL_VERSION = metadata.version("artifact")
except metadata.PackageNotFoundError:  # running from a source tree
    TOOL_VERSION = "0.0.0+src"


class ConfigError(DomainError):
    """Invalid sweep configuration (maps to exit status 2)."""


class Quantity(str, enum.Enum):
    DISPERSION = "dispersion"
    FREE_ENERGY = "free_energy"
    D2F = "d2f"
    KERNEL = "kernel"
    CORR_X = "corr_x"
    CORR_Y = "corr_y"
    CORR_Z = "corr_z"
    MZ = "mz"
    MY = "my"
    OZ = "oz"
    BETA_FIT = "beta_fit"
    CONCURRENCE = "concurrence"
    TANGLE_THERMAL = "tangle_thermal"
    TANGLE_BROKEN = "tangle_broken"
    BLOCK_ENTROPY = "block_entropy"
    CC_FIT = "cc_fit"
    ED_SUITE = "ed_suite"
    TRIPLE_ISING = "triple_ising"
    GAP = "gap"


class Format(str, enum.Enum):
    CSV = "csv"
    JSON = "json"


# grid axes each quantity iterates over, in output (sort) order
_AXES: dict[Quantity, tuple[str, ...]] = {
    Quantity.DISPERSION: ("lambda", "p"),
    Quantity.FREE_ENERGY: ("lambda", "beta"),
    Quantity.D2F: ("lambda",),
    Quantity.KERNEL: ("lambda", "beta", "r"),
    Quantity.CORR_X: ("lambda", "beta", "r"),
    Quantity.CORR_Y: ("lambda", "beta", "r"),
    Quantity.CORR_Z: ("lambda", "beta", "r"),
    Quantity.MZ: ("lambda", "beta"),
    Quantity.MY: ("lambda",),
    Quantity.OZ: ("lambda",),
    Quantity.BETA_FIT: ("side", "source"),
    Quantity.CONCURRENCE: ("lambda", "beta", "r"),
    Quantity.TANGLE_THERMAL: ("lambda", "beta"),
    Quantity.TANGLE_BROKEN: ("lambda",),
    Quantity.BLOCK_ENTROPY: ("lambda", "L"),
    Quantity.CC_FIT: ("lambda",),
    Quantity.ED_SUITE: ("N", "lambda", "h"),
    Quantity.TRIPLE_ISING: ("N", "lambda"),
    Quantity.GAP: ("lambda",),
}

# library operations reached by each quantity (checked by the test suite)
QUANTITY_OPS: dict[Quantity, tuple[Callable, ...]] = {
    Quantity.DISPERSION: (model_core.dispersion_at,),
    Quantity.FREE_ENERGY: (thermodynamics.free_energy, thermodynamics.ising_free_energy),
    Quantity.D2F: (thermodynamics.d2f_closed_form, thermodynamics.elliptic_KE),
    Quantity.KERNEL: (correlations.kernel_D,),
    Quantity.CORR_X: (correlations.correlator_x,),
    Quantity.CORR_Y: (correlations.correlator_y,),
    Quantity.CORR_Z: (correlations.correlator_z,),
    Quantity.MZ: (correlations.magnetization_z,),
    Quantity.MY: (order_params.staggered_my, order_params.szego_sum),
    Quantity.OZ: (order_params.string_order_Oz,),
    Quantity.BETA_FIT: (order_params.beta_exponent_fit,),
    Quantity.CONCURRENCE: (entanglement.two_spin_state, entanglement.concurrence),
    Quantity.TANGLE_THERMAL: (entanglement.tangle_thermal,),
    Quantity.TANGLE_BROKEN: (entanglement.tangle_broken,),
    Quantity.BLOCK_ENTROPY: (entanglement.block_entropies, entanglement.majorana_corr_matrix),
    Quantity.CC_FIT: (entanglement.central_charge_fit,),
    Quantity.ED_SUITE: (
        exact_diag.build_hamiltonian,
        exact_diag.ground_manifold,
        exact_diag.ed_correlator,
        exact_diag.ed_magnetization_z,
        exact_diag.ed_concurrence,
        exact_diag.ed_block_entropy,
        exact_diag.finite_size_scaling,
    ),
    Quantity.TRIPLE_ISING: (
        model_core.finite_spectrum,
        model_core.triple_ising_split,
        model_core.free_majorana_count,
    ),
    Quantity.GAP: (model_core.energy_gap,),
}

_DEFAULTS = {
    "lambda": (0.5, 2.0),
    "beta": (math.inf,),
    "r": (1, 2, 3),
    "L": tuple(range(1, 11)),
    "N": (4, 6, 8),
    "h": (0.0,),
    "p": tuple(np.linspace(0.0, math.pi, 13)),
}


def _tuple(values, cast=float) -> tuple:
    return tuple(sorted({cast(v) for v in values}))


@dataclass(frozen=True)
class SweepConfig:
    """One quantity and the grids it is evaluated on.

    Grid fields left as ``None`` take per-axis defaults. ``options`` holds
    quantity-specific switches: ``ed_mode`` ('cells' or 'scaling') and
    ``observable`` for ``ed_suite``; ``sides``/``sources`` for
    ``beta_fit``; ``L_range`` for ``cc_fit``.
    """

    quantity: Quantity
    lambda_grid: tuple | None = None
    beta_grid: tuple | None = None
    r_or_L_grid: tuple | None = None
    N_grid: tuple | None = None
    h_grid: tuple | None = None
    p_grid: tuple | None = None
    format: Format = Format.CSV
    options: Mapping = field(default_factory=dict)

    def __post_init__(self):
        try:
            object.__setattr__(self, "quantity", Quantity(self.quantity))
            object.__setattr__(self, "format", Format(self.format))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        for name, cast in (("lambda_grid", float), ("beta_grid", float), ("r_or_L_grid", int),
                           ("N_grid", int), ("h_grid", float), ("p_grid", float)):
            val = getattr(self, name)
            if val is None:
                continue
            try:
                val = _tuple(val, cast)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"{name}: {exc}") from None
            if not val:
                raise ConfigError(f"{name} must not be empty")
            object.__setattr__(self, name, val)
        object.__setattr__(self, "options", dict(self.options))
        self._validate()

    def grid(self, axis: str) -> tuple:
        attr = {"lambda": "lambda_grid", "beta": "beta_grid", "r": "r_or_L_grid", "L": "r_or_L_grid",
                "N": "N_grid", "h": "h_grid", "p": "p_grid"}[axis]
        val = getattr(self, attr)
        return _DEFAULTS[axis] if val is None else val

    @property
    def axes(self) -> tuple[str, ...]:
        return _AXES[self.quantity]

    def _validate(self):
        q = self.quantity
        lam = self.grid("lambda")
        if any(not x >= 0 or math.isinf(x) for x in lam):
            raise ConfigError("lambda values must be finite and >= 0")
        if any(not b > 0 for b in self.grid("beta")):
            raise ConfigError("beta values must be > 0 (inf allowed)")
        if any(h < 0 for h in self.grid("h")):
            raise ConfigError("h values must be >= 0")
        if q in (Quantity.CORR_X, Quantity.CORR_Y, Quantity.CORR_Z, Quantity.CONCURRENCE):
            if min(self.grid("r")) < 1:
                raise ConfigError("r values must be >= 1")
        if q is Quantity.BLOCK_ENTROPY and min(self.grid("L")) < 1:
            raise ConfigError("L values must be >= 1")
        if q is Quantity.ED_SUITE:
            bad = [n for n in self.grid("N") if not exact_diag.N_MIN <= n <= exact_diag.N_MAX]
            if bad:
                raise ConfigError(f"ED sizes must lie in [{exact_diag.N_MIN}, {exact_diag.N_MAX}], got {bad}")
            mode = self.options.get("ed_mode", "cells")
            if mode not in ("cells", "scaling"):
                raise ConfigError(f"unknown ed_mode {mode!r}")
            if self.options.get("observable", "mz") not in exact_diag.SPURIOUS:
                raise ConfigError(f"observable must be one of {exact_diag.SPURIOUS}")
        if q is Quantity.TRIPLE_ISING:
            bad = [n for n in self.grid("N") if n < 3 or n % 3]
            if bad:
                raise ConfigError(f"triple_ising needs N a positive multiple of 3, got {bad}")
        if q is Quantity.CC_FIT:
            L_range = self.options.get("L_range", (2, 200))
            if len(L_range) != 2 or L_range[1] - L_range[0] + 1 < 20:
                raise ConfigError("cc_fit needs L_range = (lo, hi) spanning >= 20 sizes")


@dataclass(frozen=True)
class ResultRecord:
    """One evaluated cell.

    ``values`` holds finite floats (or ints); a failed cell has empty
    values and a message in ``error``. ``timestamp`` is excluded from
    equality and from the data files.
    """

    quantity: Quantity
    coords: tuple[tuple[str, object], ...]
    values: tuple[tuple[str, object], ...]
    provenance: str = "analytic"
    tool_version: str = TOOL_VERSION
    error: str | None = None
    timestamp: float = field(default=0.0, compare=False)

    def __post_init__(self):
        for k, v in self.values:
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError(f"non-finite value for {k}: {v}")

    @property
    def key(self) -> tuple:
        return tuple(v for _, v in self.coords)

    def flat(self) -> dict:
        """Flat mapping used for JSON output."""
        out = {"quantity": self.quantity.value, **dict(self.coords), **dict(self.values),
               "provenance": self.provenance, "tool_version": self.tool_version}
        if self.error is not None:
            out["error"] = self.error
        return out


# ---------------------------------------------------------------------------
# cell evaluators: each returns a list of (coords, values, provenance)


def _cell_dispersion(c, cfg):
    return [(c, {"value": float(model_core.dispersion_at(c["lambda"], c["p"]))}, "analytic")]


def _cell_free_energy(c, cfg):
    res = thermodynamics.free_energy(c["lambda"], c["beta"])
    ising = thermodynamics.ising_free_energy(c["lambda"], c["beta"])
    return [(c, {"value": res.f, "quad_err": res.estimated_quadrature_error,
                 "ising_value": ising.f, "ising_quad_err": ising.estimated_quadrature_error}, "analytic")]


def _cell_d2f(c, cfg):
    lam = c["lambda"]
    val = thermodynamics.d2f_closed_form(lam)
    pair = thermodynamics.elliptic_KE(2.0 * math.sqrt(lam) / (1.0 + lam))
    return [(c, {"value": val, "K": pair.K, "E": pair.E}, "analytic")]


def _quad_err(c):
    return correlations.KernelTable.build(c["lambda"], c["beta"], c["r"] + 1).max_error


def _cell_kernel(c, cfg):
    val, err = correlations.kernel_D(c["r"], c["lambda"], c["beta"], with_error=True)
    return [(c, {"value": val, "quad_err": err}, "analytic")]


def _correlator_cell(fn):
    def cell(c, cfg):
        val = fn(c["r"], c["lambda"], c["beta"])
        return [(c, {"value": val, "quad_err": _quad_err(c)}, "analytic")]
    return cell


def _cell_mz(c, cfg):
    val = correlations.magnetization_z(c["lambda"], c["beta"])
    _, err = correlations.kernel_D(1, c["lambda"], c["beta"], with_error=True)
    return [(c, {"value": val, "quad_err": err}, "analytic")]


def _cell_my(c, cfg):
    lam = c["lambda"]
    return [(c, {"value": order_params.staggered_my(lam),
                 "my_squared_szego": order_params.szego_sum(lam).limit}, "analytic")]


def _cell_oz(c, cfg):
    return [(c, {"value": order_params.string_order_Oz(c["lambda"])}, "analytic")]


def _cell_beta_fit(c, cfg):
    fit = order_params.beta_exponent_fit(c["side"], source=c["source"])
    expected = order_params.MY_EXPONENT if c["side"] == "above" else order_params.OZ_EXPONENT
    return [(c, {"exponent": fit.exponent, "stderr": fit.stderr, "amplitude": fit.amplitude,
                 "expected": expected, "window_lo": float(fit.window[0]),
                 "window_hi": float(fit.window[1])}, "analytic")]


def _cell_concurrence(c, cfg):
    state = entanglement.two_spin_state(c["r"], c["lambda"], c["beta"])
    return [(c, {"value": entanglement.concurrence(state)}, "analytic")]


def _cell_tangle_thermal(c, cfg):
    return [(c, {"value": entanglement.tangle_thermal(c["lambda"], c["beta"])}, "analytic")]


def _cell_tangle_broken(c, cfg):
    return [(c, {"value": entanglement.tangle_broken(c["lambda"])}, "analytic")]


def _cell_cc_fit(c, cfg):
    lo, hi = cfg.options.get("L_range", (2, 200))
    fit = entanglement.central_charge_fit(range(int(lo), int(hi) + 1), c["lambda"]).fit
    return [(c, {"slope": fit.slope, "slope_stderr": fit.slope_stderr, "intercept": fit.intercept,
                 "intercept_stderr": fit.intercept_stderr, "central_charge": fit.central_charge,
                 "L_min": int(lo), "L_max": int(hi)}, "analytic")]


def _cell_ed(c, cfg):
    n, lam, h = c["N"], c["lambda"], c["h"]
    params = ModelParams(lam, math.inf, n, Boundary.PERIODIC, h)
    man = exact_diag.ground_manifold(exact_diag.build_hamiltonian(params))
    vals = {
        "e0_per_site": man.ground_energy / n,
        "gap": float(man.energies[1] - man.energies[0]),
        "degeneracy": man.degeneracy,
        "corr_x1": exact_diag.ed_correlator(man, "x", 1, 2),
        "corr_y1": exact_diag.ed_correlator(man, "y", 1, 2),
        "corr_z1": exact_diag.ed_correlator(man, "z", 1, 2),
        "mz": exact_diag.ed_magnetization_z(man),
        "concurrence_1": exact_diag.ed_concurrence(man, 1, 2),
        "concurrence_2": exact_diag.ed_concurrence(man, 1, 3) if n > 3 else 0.0,
        "entropy_half": exact_diag.ed_block_entropy(man.pure(0), n // 2),
    }
    return [(c, vals, "ED")]


def _cell_triple_ising(c, cfg):
    params = ModelParams(c["lambda"], math.inf, c["N"])
    full = np.sort(model_core.finite_spectrum(params).energies)
    split = np.sort(np.concatenate(model_core.triple_ising_split(params)))
    open_params = ModelParams(c["lambda"], math.inf, c["N"], Boundary.OPEN)
    return [(c, {"max_abs_dev": float(np.max(np.abs(full - split))),
                 "vacuum_energy": -float(full.sum()),
                 "free_majoranas_open": model_core.free_majorana_count(open_params)}, "analytic")]


def _cell_gap(c, cfg):
    lam = c["lambda"]
    p = np.linspace(0.0, math.pi, 10_001)
    grid_min = 2.0 * float(np.min(model_core.dispersion_at(lam, p)))
    return [(c, {"value": model_core.energy_gap(lam), "grid_min": grid_min}, "analytic")]


_CELLS = {
    Quantity.DISPERSION: _cell_dispersion,
    Quantity.FREE_ENERGY: _cell_free_energy,
    Quantity.D2F: _cell_d2f,
    Quantity.KERNEL: _cell_kernel,
    Quantity.CORR_X: _correlator_cell(correlations.correlator_x),
    Quantity.CORR_Y: _correlator_cell(correlations.correlator_y),
    Quantity.CORR_Z: _correlator_cell(correlations.correlator_z),
    Quantity.MZ: _cell_mz,
    Quantity.MY: _cell_my,
    Quantity.OZ: _cell_oz,
    Quantity.BETA_FIT: _cell_beta_fit,
    Quantity.CONCURRENCE: _cell_concurrence,
    Quantity.TANGLE_THERMAL: _cell_tangle_thermal,
    Quantity.TANGLE_BROKEN: _cell_tangle_broken,
    Quantity.CC_FIT: _cell_cc_fit,
    Quantity.ED_SUITE: _cell_ed,
    Quantity.TRIPLE_ISING: _cell_triple_ising,
    Quantity.GAP: _cell_gap,
}


def _block_entropy_cell(c, cfg):
    # one cell per coupling: all L share a single correlation matrix
    Ls = cfg.grid("L")
    S = entanglement.block_entropies(Ls, c["lambda"])
    return [({**c, "L": L}, {"value": float(s)}, "analytic") for L, s in zip(Ls, S)]


def _ed_scaling_cell(c, cfg):
    which = c["observable"]
    lam_grid = cfg.lambda_grid or tuple(np.linspace(0.0, 3.0, 31))
    peaks = {}
    vals = {}
    for n in cfg.grid("N"):
        lam_star, peak = exact_diag.spurious_peak(n, which, lam_grid)
        peaks[n] = peak
        vals[f"peak_N{n}"] = peak
        vals[f"lambda_star_N{n}"] = lam_star
    fit = exact_diag.finite_size_scaling(peaks)
    vals = {"exponent": fit.exponent, "exponent_stderr": fit.exponent_stderr,
            "prefactor": fit.prefactor, "prefactor_stderr": fit.prefactor_stderr, **vals}
    return [(c, vals, "ED")]


def _cells(cfg: SweepConfig) -> list[tuple[dict, Callable]]:
    q = cfg.quantity
    if q is Quantity.BLOCK_ENTROPY:
        return [({"lambda": lam}, _block_entropy_cell) for lam in cfg.grid("lambda")]
    if q is Quantity.ED_SUITE and cfg.options.get("ed_mode", "cells") == "scaling":
        return [({"observable": cfg.options.get("observable", "mz")}, _ed_scaling_cell)]
    if q is Quantity.BETA_FIT:
        sides = cfg.options.get("sides", ("above", "below"))
        sources = cfg.options.get("sources", ("closed_form", "toeplitz"))
        return [({"side": s, "source": src}, _cell_beta_fit)
                for s, src in itertools.product(sorted(sides), sorted(sources))]
    axes = cfg.axes
    grids = [cfg.grid(a) for a in axes]
    fn = _CELLS[q]
    return [(dict(zip(axes, point)), fn) for point in itertools.product(*grids)]


def _error_coords(c, cfg):
    if cfg.quantity is Quantity.BLOCK_ENTROPY:
        return [{**c, "L": L} for L in cfg.grid("L")]
    return [c]


def _evaluate(cfg: SweepConfig, cell) -> list[ResultRecord]:
    coords, fn = cell
    stamp = time.time()
    try:
        return [ResultRecord(cfg.quantity, tuple(c.items()), tuple(v.items()), prov, TOOL_VERSION, None, stamp)
                for c, v, prov in fn(coords, cfg)]
    except (CIMError, ArithmeticError, ValueError, np.linalg.LinAlgError) as exc:
        prov = "ED" if cfg.quantity is Quantity.ED_SUITE else "analytic"
        msg = f"{type(exc).__name__}: {exc}"
        return [ResultRecord(cfg.quantity, tuple(c.items()), (), prov, TOOL_VERSION, msg, stamp)
                for c in _error_coords(coords, cfg)]


def default_threads() -> int:
    env = os.environ.get("CIM_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ConfigError(f"CIM_THREADS must be an integer, got {env!r}") from None
        if n < 1:
            raise ConfigError("CIM_THREADS must be >= 1")
        return n
    return 1


def run_sweep(config: SweepConfig, threads: int | None = None) -> Iterator[ResultRecord]:
    """Evaluate every cell of ``config``; yields records in coordinate order.

    Cells are enumerated in sorted coordinate order and results are
    yielded in that order as they become available (ordered reduction),
    so partial output can be flushed while later cells still run. Cell
    failures become records with an ``error`` message.
    """
    threads = default_threads() if threads is None else int(threads)
    if threads < 1:
        raise ConfigError("threads must be >= 1")
    cells = _cells(config)
    if threads == 1:
        for cell in cells:
            yield from _evaluate(config, cell)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for recs in pool.map(lambda cell: _evaluate(config, cell), cells):
            yield from recs


# ---------------------------------------------------------------------------
# serialization


def format_number(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _json_scalar(x) -> str:
    if isinstance(x, str):
        return json.dumps(x)
    if x is None:
        return "null"
    s = format_number(x)
    if s in ("inf", "-inf"):
        return "Infinity" if s == "inf" else "-Infinity"
    if s in ("true", "false"):
        return s
    if isinstance(x, float) and "e" not in s and "." not in s and s not in ("nan",):
        s += ".0"  # keep floats floats on the way back in
    return s


def csv_header(records: list[ResultRecord]) -> list[str]:
    first = next((r for r in records if r.error is None), records[0])
    cols = [k for k, _ in first.coords]
    seen = set(cols)
    for r in records:
        for k, _ in r.values:
            if k not in seen:
                seen.add(k)
                cols.append(k)
    if any(r.error is not None for r in records):
        cols.append("error")
    return cols


def to_csv(records: Iterable[ResultRecord]) -> str:
    records = list(records)
    if not records:
        return ""
    cols = csv_header(records)
    buf = io.StringIO(newline="")
    buf.write(",".join(cols) + "\n")
    for r in records:
        row = {**dict(r.coords), **dict(r.values)}
        if r.error is not None:
            row["error"] = r.error
        cells = []
        for col in cols:
            v = row.get(col, "")
            if isinstance(v, str):
                cells.append('"' + v.replace('"', '""') + '"' if ("," in v or '"' in v) else v)
            else:
                cells.append(format_number(v))
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()


def to_json(records: Iterable[ResultRecord]) -> str:
    lines = []
    for r in records:
        body = ", ".join(f"{json.dumps(k)}: {_json_scalar(v)}" for k, v in r.flat().items())
        lines.append("  {" + body + "}")
    return "[\n" + ",\n".join(lines) + "\n]\n" if lines else "[]\n"


def parse_json(text: str) -> list[dict]:
    return json.loads(text)


def manifest(config: SweepConfig, records: list[ResultRecord], started: float) -> dict:
    return {
        "quantity": config.quantity.value,
        "tool_version": TOOL_VERSION,
        "started": started,
        "finished": time.time(),
        "n_records": len(records),
        "n_errors": sum(r.error is not None for r in records),
        "provenance": sorted({r.provenance for r in records}),
    }


def emit(records: Iterable[ResultRecord], fmt: Format | str = Format.CSV, out=None,
         config: SweepConfig | None = None, started: float | None = None) -> str:
    """Serialize records; write to ``out`` (path or text stream) if given.

    Returns the serialized text. When ``out`` is a path and ``config`` is
    given, a ``<out>.manifest.json`` sidecar with timestamps is written too.
    """
    records = list(records)
    fmt = Format(fmt)
    text = to_csv(records) if fmt is Format.CSV else to_json(records)
    if out is None:
        return text
    if hasattr(out, "write"):
        out.write(text)
        return text
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    if config is not None:
        side = manifest(config, records, time.time() if started is None else started)
        with open(f"{out}.manifest.json", "w", encoding="utf-8", newline="\n") as fh:
            json.dump(side, fh, indent=2)
            fh.write("\n")
    return text


# ---------------------------------------------------------------------------
# figure presets


@dataclass(frozen=True)
class Recipe:
    name: str
    description: str
    configs: tuple[SweepConfig, ...]


def _arange(a, b, step):
    n = int(round((b - a) / step)) + 1
    return tuple(round(a + i * step, 12) for i in range(n))


# coupling grids that step over the critical point where closed forms are singular
_OFF_CRITICAL = _arange(0.005, 2.995, 0.01)
_LAMBDA_CORR = _arange(0.0, 3.0, 0.02)


def figure_recipes() -> list[Recipe]:
    """One preset per figure of the original study."""
    Q = Quantity
    return [
        Recipe("fig1", "broken-symmetry tangle vs lambda",
               (SweepConfig(Q.TANGLE_BROKEN, lambda_grid=_arange(0.005, 1.995, 0.01)),)),
        Recipe("fig2", "string order O_z and staggered magnetization m_y vs lambda",
               (SweepConfig(Q.OZ, lambda_grid=_arange(0.005, 1.995, 0.01)),
                SweepConfig(Q.MY, lambda_grid=_arange(0.005, 1.995, 0.01)))),
        Recipe("fig4", "|R^x_r| for r = 3, 6, 9, 12 at T = 0 and T = 1/2",
               (SweepConfig(Q.CORR_X, lambda_grid=_LAMBDA_CORR, beta_grid=(2.0, math.inf),
                            r_or_L_grid=(3, 6, 9, 12)),)),
        Recipe("fig5", "|R^y_r| for r = 1, 2, 6, 14 at T = 0 and T = 3/2",
               (SweepConfig(Q.CORR_Y, lambda_grid=_LAMBDA_CORR, beta_grid=(2.0 / 3.0, math.inf),
                            r_or_L_grid=(1, 2, 6, 14)),)),
        Recipe("fig6", "R^x_3 and R^y_14 at several temperatures",
               (SweepConfig(Q.CORR_X, lambda_grid=_LAMBDA_CORR, beta_grid=(0.2, 0.5, 1.0, 2.0, math.inf),
                            r_or_L_grid=(3,)),
                SweepConfig(Q.CORR_Y, lambda_grid=_LAMBDA_CORR,
                            beta_grid=(1.0 / 3.0, 0.5, 1.0, 2.0, math.inf), r_or_L_grid=(14,)))),
        Recipe("fig7", "finite-size x/z correlators and m_z, and the power-law fit of their peaks",
               (SweepConfig(Q.ED_SUITE, lambda_grid=_arange(0.0, 3.0, 0.05), N_grid=(4, 6, 8, 10, 12)),
                SweepConfig(Q.ED_SUITE, lambda_grid=_arange(0.0, 3.0, 0.1), N_grid=(4, 8, 10),
                            options={"ed_mode": "scaling", "observable": "mz"}))),
        Recipe("fig8", "thermal-state concurrence from exact diagonalization",
               (SweepConfig(Q.ED_SUITE, lambda_grid=_arange(0.0, 3.0, 0.05), N_grid=(4, 6, 8, 10, 12)),)),
        Recipe("fig9", "concurrence with a staggered symmetry-breaking field, N = 8",
               (SweepConfig(Q.ED_SUITE, lambda_grid=_arange(0.0, 3.0, 0.05), N_grid=(8,),
                            h_grid=(0.0, 1e-5, 1e-4, 1e-3, 0.01, 0.05, 0.1)),)),
        Recipe("fig10", "block entropy S_L for L = 2..200 at lambda = 1 and its log fit",
               (SweepConfig(Q.BLOCK_ENTROPY, lambda_grid=(1.0,), r_or_L_grid=tuple(range(2, 201))),
                SweepConfig(Q.CC_FIT, lambda_grid=(1.0,), options={"L_range": (2, 200)}))),
    ]


def get_recipe(name: str) -> Recipe:
    for r in figure_recipes():
        if r.name == name:
            return r
    raise ConfigError(f"unknown recipe {name!r}; known: {[r.name for r in figure_recipes()]}")


def with_format(cfg: SweepConfig, fmt) -> SweepConfig:
    return replace(cfg, format=Format(fmt))
