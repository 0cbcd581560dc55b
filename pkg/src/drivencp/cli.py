"""Command-line front end: parameter files in, CSV curve data and scalar reports out.

Exit codes: 0 success, 2 config error, 3 numerical failure (including failed
verify checks).  CSV output is deterministic: same config, same bytes,
regardless of DRIVEN_CP_THREADS.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import math
import os
import sys as _sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import __version__
from .bloch import bloch_analytic
from .constants import CONST
from .errors import ConfigError, ConvergenceError, DomainError, PoleError, ResolutionError
from .figures import (
    DEFAULT_N_POINTS,
    DEFAULT_Z_MAX,
    DEFAULT_Z_MIN,
    FIG4_DISTANCES,
    FIGURE_IDS,
    PotentialCurve,
    default_z_grid,
    figure_curves,
)
from .params import (
    Alignment,
    AtomParams,
    LaserParams,
    build_driven_system,
    intensity_to_field,
    REFERENCE_DETUNING,
    REFERENCE_INTENSITY,
    SODIUM_DIPOLE,
    SODIUM_OMEGA10,
)
from .polarizability import alpha_isotropic
from .potentials import (
    U_LIGHT_SODIUM_LITERATURE,
    u0_u1,
    u_cp_undriven_excited,
    u_lcp_bloch,
    u_lcp_perreault,
    u_lcp_perturbative,
    u_light,
)
from .quadrature import DEFAULT_EVAL_BUDGET
from .verify import run_checks

ROUTES = ("pert", "bloch", "undriven", "perreault", "all")


class _Fmt:
    """12 significant digits, locale-independent, negative zero normalized."""

    @staticmethod
    def format(value: float) -> str:
        return "{:.11e}".format(value + 0.0)


FMT = _Fmt


@dataclass
class RunConfig:
    """Flat run configuration; every key can come from a config file or --set."""

    d: float = SODIUM_DIPOLE
    omega10: float = SODIUM_OMEGA10
    detuning: float = REFERENCE_DETUNING
    intensity: float = REFERENCE_INTENSITY
    e0: Optional[float] = None          # overrides intensity when given
    theta: float = math.pi / 2
    alignment: str = "parallel"
    route: str = "all"
    figure: Optional[int] = None
    avg: bool = True
    z_min: float = DEFAULT_Z_MIN
    z_max: float = DEFAULT_Z_MAX
    z_count: int = DEFAULT_N_POINTS
    z: float = 1e-7                     # fixed distance for dynamics runs
    t_count: int = DEFAULT_N_POINTS
    t_max: Optional[float] = None       # defaults to one dressed period
    quad_budget: int = DEFAULT_EVAL_BUDGET
    out: Optional[str] = None

    _FLOAT_KEYS = ("d", "omega10", "detuning", "intensity", "e0", "theta",
                   "z_min", "z_max", "z", "t_max")
    _INT_KEYS = ("z_count", "t_count", "figure", "quad_budget")
    _BOOL_KEYS = ("avg",)
    _STR_KEYS = ("alignment", "route", "out")

    def set_key(self, key: str, raw: str, where: str) -> None:
        key = key.strip()
        raw = raw.strip()
        try:
            if key in self._FLOAT_KEYS:
                setattr(self, key, float(raw))
            elif key in self._INT_KEYS:
                setattr(self, key, int(raw))
            elif key in self._BOOL_KEYS:
                if raw.lower() not in ("true", "false", "1", "0"):
                    raise ValueError(f"expected boolean, got {raw!r}")
                setattr(self, key, raw.lower() in ("true", "1"))
            elif key in self._STR_KEYS:
                setattr(self, key, raw)
            else:
                raise ConfigError(f"{where}: unknown key {key!r}")
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"{where}: field {key!r}: {exc}") from exc

    def validate(self) -> None:
        if self.alignment not in ("parallel", "isotropic"):
            raise ConfigError(f"field 'alignment': must be parallel or isotropic, got {self.alignment!r}")
        if self.route not in ROUTES:
            raise ConfigError(f"field 'route': must be one of {ROUTES}, got {self.route!r}")
        if self.figure is not None and self.figure not in FIGURE_IDS:
            raise ConfigError(f"field 'figure': must be in {FIGURE_IDS}, got {self.figure}")
        if self.z_count < 2 or self.t_count < 2:
            raise ConfigError("fields 'z_count'/'t_count': grid counts must be >= 2")
        if not (0 < self.z_min < self.z_max):
            raise ConfigError("fields 'z_min'/'z_max': need 0 < z_min < z_max")
        if not (self.z > 0):
            raise ConfigError(f"field 'z': must be > 0, got {self.z}")
        if self.t_max is not None and not (self.t_max > 0):
            raise ConfigError(f"field 't_max': must be > 0, got {self.t_max}")
        if self.quad_budget < 42:
            raise ConfigError(f"field 'quad_budget': too small, got {self.quad_budget}")

    # -- derived objects ----------------------------------------------------

    def atom(self) -> AtomParams:
        try:
            return AtomParams(d=self.d, omega10=self.omega10)
        except DomainError as exc:
            raise ConfigError(f"field 'd'/'omega10': {exc}") from exc

    def laser(self) -> LaserParams:
        e0 = self.e0 if self.e0 is not None else intensity_to_field(self.intensity)
        try:
            return LaserParams(omega_l=self.omega10 + self.detuning, e0=e0, theta=self.theta)
        except DomainError as exc:
            raise ConfigError(f"laser fields: {exc}") from exc

    def system(self):
        align = Alignment.PARALLEL if self.alignment == "parallel" else Alignment.ISOTROPIC
        return build_driven_system(self.atom(), self.laser(), align)

    def canonical_items(self) -> list[tuple[str, str]]:
        items = []
        for field in dataclasses.fields(self):
            if field.name == "out":   # output location is not part of the physics config
                continue
            value = getattr(self, field.name)
            items.append((field.name, "" if value is None else str(value)))
        return sorted(items)

    def config_hash(self) -> str:
        blob = "\n".join(f"{k}={v}" for k, v in self.canonical_items())
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def load_config(path: Optional[str], overrides: list[str]) -> RunConfig:
    cfg = RunConfig()
    if path:
        try:
            lines = open(path, encoding="utf-8").read().splitlines()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
        for lineno, line in enumerate(lines, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {stripped!r}")
            key, _, raw = stripped.partition("=")
            cfg.set_key(key, raw, where=f"{path}:{lineno}")
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"--set: expected KEY=VALUE, got {item!r}")
        key, _, raw = item.partition("=")
        cfg.set_key(key, raw, where="--set")
    cfg.validate()
    return cfg


def _thread_count() -> int:
    raw = os.environ.get("DRIVEN_CP_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise ConfigError(f"DRIVEN_CP_THREADS: expected integer, got {raw!r}") from exc
    if n < 1:
        raise ConfigError(f"DRIVEN_CP_THREADS: must be >= 1, got {n}")
    return n


def _map_ordered(fn, items):
    """Evaluate fn over items, possibly in parallel; output order = input order."""
    n = _thread_count()
    items = list(items)
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# CSV writing
# ---------------------------------------------------------------------------

def _csv_header_lines(cfg: RunConfig, schema: str, curves: list[PotentialCurve]) -> list[str]:
    lines = [
        f"# schema={schema}",
        f"# tool=drivencp {__version__}",
        f"# config_hash={cfg.config_hash()}",
        f"# c={FMT.format(CONST.c)}",
        f"# hbar={FMT.format(CONST.hbar)}",
        f"# eps0={FMT.format(CONST.eps0)}",
        f"# mu0={FMT.format(CONST.mu0)}",
    ]
    if cfg.figure is not None:
        lines.append(f"# figure={cfg.figure}")
    for curve in curves:
        lines.append(f"# label.{curve.key}={curve.label}")
    return lines


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        _sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _potential_csv(cfg: RunConfig, curves: list[PotentialCurve]) -> str:
    time_series = any(c.x_name == "t_s" for c in curves)
    header = "z_m,route,value_J,convention,curve" + (",t_s" if time_series else "")
    rows = []
    for curve in curves:
        for x, value in zip(curve.x, curve.values):
            if curve.x_name == "t_s":
                row = (f"{FMT.format(curve.z)},{curve.route},{FMT.format(float(value))},"
                       f"{curve.convention},{curve.key},{FMT.format(float(x))}")
            else:
                row = (f"{FMT.format(float(x))},{curve.route},{FMT.format(float(value))},"
                       f"{curve.convention},{curve.key}")
                if time_series:
                    row += ","  # empty t_s cell for distance rows
            rows.append(row)
    lines = _csv_header_lines(cfg, "drivencp.potential.v1", curves) + [header] + rows
    return "\n".join(lines) + "\n"


def _manual_curves(cfg: RunConfig) -> list[PotentialCurve]:
    """Curves for a plain (non-figure) potential run on the configured z grid."""
    system = cfg.system()
    atom = system.atom
    z = default_z_grid(cfg.z_count, cfg.z_min, cfg.z_max)
    wanted = ROUTES[:-1] if cfg.route == "all" else (cfg.route,)
    curves: list[PotentialCurve] = []
    if "pert" in wanted:
        alpha = alpha_isotropic(atom, system.laser.omega_l)
        vals = np.array(_map_ordered(lambda zz: u_lcp_perturbative(system, alpha, float(zz)), z))
        curves.append(PotentialCurve("pert", "driven, initial-state route", "pert",
                                     "field-aligned isotropic alpha", "z_m", z, vals))
    if "bloch" in wanted:
        def point(zz: float) -> tuple[float, float, float]:
            u0, u1 = u0_u1(atom, system.laser.omega_l, float(zz), eval_budget=cfg.quad_budget)
            if cfg.avg:
                w = system.omega_dressed
                mean_p1 = 0.5 * (system.omega_rabi / w) ** 2 if w > 0 else 0.0
                total = (1.0 - mean_p1) * u0 + mean_p1 * u1
            else:
                total = u_lcp_bloch(system, float(zz), t=0.0, mode="populations",
                                    eval_budget=cfg.quad_budget)
            return total, u0, u1

        try:
            triples = _map_ordered(point, z)
        except ConvergenceError as exc:
            raise ConvergenceError(
                f"quadrature failed while tabulating the bloch route: {exc}",
                exc.partial_value, exc.est_error, exc.n_evals) from exc
        curves.append(PotentialCurve("bloch", "driven, Bloch route (population-weighted)",
                                     "bloch", "x-aligned d^2/3", "z_m", z,
                                     np.array([t[0] for t in triples])))
        curves.append(PotentialCurve("u0", "ground-state contribution", "u0",
                                     "x-aligned d^2/3", "z_m", z,
                                     np.array([t[1] for t in triples])))
        curves.append(PotentialCurve("u1", "excited-state contribution", "u1",
                                     "x-aligned d^2/3", "z_m", z,
                                     np.array([t[2] for t in triples])))
    if "undriven" in wanted:
        vals = np.array(_map_ordered(lambda zz: u_cp_undriven_excited(atom, float(zz)), z))
        curves.append(PotentialCurve("undriven", "undriven excited atom", "undriven",
                                     "x-aligned d^2/3", "z_m", z, vals))
    if "perreault" in wanted:
        alpha = alpha_isotropic(atom, system.laser.omega_l)
        vals = np.array(_map_ordered(lambda zz: u_lcp_perreault(system, alpha, float(zz)), z))
        curves.append(PotentialCurve("perreault", "z^-3 image-dipole form", "perreault",
                                     "field-aligned isotropic alpha", "z_m", z, vals))
    return curves


def _scalar_report(cfg: RunConfig) -> str:
    system = cfg.system()
    lines = [
        f"omega_rabi_rad_s = {FMT.format(system.omega_rabi)}",
        f"delta_rad_s = {FMT.format(system.delta)}",
        f"omega_dressed_rad_s = {FMT.format(system.omega_dressed)}",
    ]
    try:
        lines.append(f"u_light_J = {FMT.format(u_light(system))}")
    except PoleError:
        lines.append("u_light_J = n/a (Delta = 0)")
    lines.append(f"u_light_literature_J = {FMT.format(U_LIGHT_SODIUM_LITERATURE)}"
                 " (published value for this drive; sign/magnitude convention differs,"
                 " agreement not asserted)")
    return "\n".join(lines) + "\n"


def cmd_potential(cfg: RunConfig) -> int:
    if cfg.figure is not None:
        curves = figure_curves(cfg.figure, n_points=cfg.z_count, z_min=cfg.z_min, z_max=cfg.z_max)
    else:
        curves = _manual_curves(cfg)
    _write_text(cfg.out, _potential_csv(cfg, curves))
    _sys.stdout.write(_scalar_report(cfg))
    return 0


def cmd_dynamics(cfg: RunConfig) -> int:
    system = cfg.system()
    if cfg.t_max is not None:
        t_max = cfg.t_max
    elif system.omega_dressed > 0:
        t_max = 2.0 * math.pi / system.omega_dressed
    else:
        raise ConfigError("field 't_max': required for an undriven resonant system (no dressed period)")
    t_grid = np.linspace(0.0, t_max, cfg.t_count)
    distances = FIG4_DISTANCES if cfg.figure == 4 else (cfg.z,)
    if cfg.figure is not None and cfg.figure != 4:
        raise ConfigError(f"field 'figure': dynamics supports only the figure-4 preset, got {cfg.figure}")

    header = "t_s,p0,p1,re_a10,im_a10,U_BE_J,z_m,curve"
    rows = []
    for z_fixed in distances:
        key = f"bloch_z{z_fixed:.0e}"
        for t in t_grid:
            state = bloch_analytic(system, float(t))
            u = u_lcp_bloch(system, z_fixed, t=float(t), mode="resonant")
            rows.append(",".join([
                FMT.format(float(t)), FMT.format(state.p0), FMT.format(state.p1),
                FMT.format(state.a10.real), FMT.format(state.a10.imag),
                FMT.format(u), FMT.format(z_fixed), key,
            ]))
    head = [
        "# schema=drivencp.dynamics.v1",
        f"# tool=drivencp {__version__}",
        f"# config_hash={cfg.config_hash()}",
        f"# c={FMT.format(CONST.c)}",
        f"# hbar={FMT.format(CONST.hbar)}",
        f"# eps0={FMT.format(CONST.eps0)}",
        f"# mu0={FMT.format(CONST.mu0)}",
    ]
    if cfg.figure == 4:
        head.append("# figure=4")
    for z_fixed in distances:
        head.append(f"# label.bloch_z{z_fixed:.0e}=z = {z_fixed:.0e} m")
    _write_text(cfg.out, "\n".join(head + [header] + rows) + "\n")
    _sys.stdout.write(_scalar_report(cfg))
    return 0


def cmd_verify(as_json: bool, flip_rabi_sign: bool) -> int:
    results = run_checks(flip_rabi_sign=flip_rabi_sign)
    if as_json:
        payload = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        _sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for r in results:
            _sys.stdout.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}\n")
    return 0 if all(r.passed for r in results) else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drivencp",
        description="Casimir-Polder potential of a laser-driven two-level atom near a perfect mirror",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="flat key = value parameter file")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override one config key (repeatable)")
        p.add_argument("--out", help="output CSV path ('-' or absent: stdout)")

    p_pot = sub.add_parser("potential", help="tabulate potential curves over distance")
    add_common(p_pot)
    p_pot.add_argument("--figure", type=int, choices=FIGURE_IDS, help="emit a figure preset")
    p_pot.add_argument("--route", choices=ROUTES, help="curve selection for non-preset runs")
    group = p_pot.add_mutually_exclusive_group()
    group.add_argument("--avg", dest="avg", action="store_true", default=None,
                       help="time-averaged values (default)")
    group.add_argument("--time", dest="avg", action="store_false",
                       help="instantaneous values at t = 0 for the bloch route")

    p_dyn = sub.add_parser("dynamics", help="tabulate Bloch dynamics and U(t)")
    add_common(p_dyn)
    p_dyn.add_argument("--figure", type=int, choices=(4,), help="two-distance time preset")

    p_ver = sub.add_parser("verify", help="run the cross-route consistency suite")
    p_ver.add_argument("--json", action="store_true", help="machine-readable report")
    p_ver.add_argument("--flip-rabi-sign", action="store_true",
                       help="debug: corrupt the Rabi sign to exercise the suite's sensitivity")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(as_json=args.json, flip_rabi_sign=args.flip_rabi_sign)
        cfg = load_config(args.config, args.set)
        if args.out is not None:
            cfg.out = args.out
        if args.command == "potential":
            if args.figure is not None:
                cfg.figure = args.figure
            if args.route is not None:
                cfg.route = args.route
            if args.avg is not None:
                cfg.avg = args.avg
            cfg.validate()
            return cmd_potential(cfg)
        if args.figure is not None:
            cfg.figure = args.figure
        cfg.validate()
        return cmd_dynamics(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=_sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=_sys.stderr)
        return 3
    except (DomainError, ResolutionError) as exc:
        print(f"numerical failure: {exc}", file=_sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
