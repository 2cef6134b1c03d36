"""Command-line front end: configuration, orchestration, reporting.

Three subcommands cover the three layers of the package. ``verify`` runs the
exact symbolic suites, ``derive`` builds the spectrum through all four
independent routes and compares them, and ``numcheck`` drives the
finite-difference oracles. Reports are deterministic JSON (sorted keys,
floats fixed to 12 significant digits, no wall-clock data unless asked for)
so that identical configurations yield byte-identical output.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 configuration
or usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, permutations

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - python < 3.11
    import tomli as tomllib

import numpy as np

from . import __version__
from .opalg import Operator
from .qoscillator import (group_levels, nu_values, spectra_agree,
                          spectrum_cartesian, spectrum_chain,
                          spectrum_hyperspherical, spectrum_pairwise)
from .spectral import (SeparatedSolution, angular_residual,
                       cartesian_residual, degeneracy_count, fd_eigen_1d,
                       radial_residual, sample_box_points)
from .swsym import (GeneratorSet, build_generators, relation_catalog,
                    verify_chain_substructure, verify_substructure_qij,
                    verify_su11, verify_sw_relations, verify_top_substructure)

SCHEMA_VERSION = "1.0"
SUITES = ("sw_relations", "substructures", "racah_chain", "su11",
          "casimirs", "spectra", "numeric")
SYMBOLIC_SUITES = frozenset(SUITES[:5])

# coupling window in which both branch signs give admissible states
_WINDOW_LO = Fraction(-1, 8)
_WINDOW_HI = Fraction(3, 8)


class ConfigError(Exception):
    """Raised for any invalid configuration or parameter combination."""


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def _parse_number(value, where: str):
    """Accept ints, floats, and exact rationals written as strings."""
    if isinstance(value, bool):
        raise ConfigError(f"{where}: expected a number, got a boolean")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"{where}: cannot read {value!r} as a rational")
    raise ConfigError(f"{where}: expected a number, got {type(value).__name__}")


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by all subcommands."""

    n: int = 3
    a: tuple = (Fraction(1), Fraction(1), Fraction(1))
    b: object = Fraction(1, 2)
    branches: tuple = (1, 1, 1)
    suites: tuple = SUITES
    n_max: int = 8
    p_max: int = 6
    grid_points: int = 4000
    grid_defaulted: bool = True
    eig_levels: int = 5
    eig_rel_tol: float = 1e-3
    residual_tol: float = 1e-7
    residual_points: int = 24
    spectra_rel_tol: float = 1e-12
    ratio_window: tuple = (3.5, 4.5)
    fault: str | None = None
    exact: bool = False
    timings: bool = False

    def validate(self) -> "RunConfig":
        if self.n < 2:
            raise ConfigError("need at least two coordinates (n >= 2)")
        if len(self.a) != self.n or len(self.branches) != self.n:
            raise ConfigError("a and branches must both have length n")
        for i, a_i in enumerate(self.a, start=1):
            if a_i <= _WINDOW_LO:
                raise ConfigError(f"a[{i}] must exceed -1/8")
        for eps in self.branches:
            if eps not in (1, -1):
                raise ConfigError("branch signs must be +1 or -1")
        if not (self.b > 0):
            raise ConfigError("the confining coupling b must be positive")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ConfigError(f"unknown suites: {sorted(unknown)}")
        if not self.suites:
            raise ConfigError("at least one suite must be selected")
        if self.n_max < 0 or self.p_max < 0:
            raise ConfigError("cutoffs must be nonnegative")
        if self.grid_points < 16:
            raise ConfigError("grid needs at least 16 interior points")
        return self

    def echo(self) -> dict:
        """Canonical form of the configuration for the report."""
        return {
            "n": self.n,
            "a": [_num_repr(v) for v in self.a],
            "b": _num_repr(self.b),
            "branches": list(self.branches),
            "suites": sorted(self.suites),
            "cutoffs": {"n_max": self.n_max, "p_max": self.p_max},
            "grid": {"points": self.grid_points,
                     "defaulted": self.grid_defaulted,
                     "eig_levels": self.eig_levels},
            "tolerances": {"eig_rel": self.eig_rel_tol,
                           "residual": self.residual_tol,
                           "spectra_rel": self.spectra_rel_tol},
            "fault": self.fault,
            "exact": self.exact,
        }


def _num_repr(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator > 1 else int(value)
    return float(value)


def load_config(path: str | None) -> RunConfig:
    """Read a TOML config file; with no path the built-in defaults apply."""
    if path is None:
        return RunConfig().validate()
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}")
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"bad TOML: {exc}")
    return _config_from_mapping(raw).validate()


def _config_from_mapping(raw: dict) -> RunConfig:
    cfg = RunConfig()
    known = {"n", "a", "b", "s", "branches", "suites", "cutoffs", "grid",
             "tolerances", "fault"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    n = raw.get("n", cfg.n)
    if not isinstance(n, int):
        raise ConfigError("n must be an integer")

    a_raw = raw.get("a", None)
    if a_raw is None:
        a_vals = tuple(Fraction(1) for _ in range(n))
    else:
        if not isinstance(a_raw, list):
            raise ConfigError("a must be a list")
        a_vals = tuple(_parse_number(v, f"a[{k}]")
                       for k, v in enumerate(a_raw, start=1))
        if len(a_vals) == 1:
            a_vals = a_vals * n

    if "b" in raw and "s" in raw:
        raise ConfigError("give either b or s, not both")
    if "s" in raw:
        s_val = _parse_number(raw["s"], "s")
        b_val = s_val * s_val / 2
    else:
        b_val = _parse_number(raw.get("b", cfg.b), "b")

    br_raw = raw.get("branches", None)
    if br_raw is None:
        branches = tuple(1 for _ in range(n))
    else:
        if not isinstance(br_raw, list) or not all(
                isinstance(v, int) for v in br_raw):
            raise ConfigError("branches must be a list of integers")
        branches = tuple(br_raw)
        if len(branches) == 1:
            branches = branches * n

    suites = tuple(raw.get("suites", SUITES))
    if not all(isinstance(s, str) for s in suites):
        raise ConfigError("suites must be strings")

    cut = raw.get("cutoffs", {})
    grid = raw.get("grid", None)
    tol = raw.get("tolerances", {})
    fault = raw.get("fault", {}).get("generator")
    if fault is not None and not isinstance(fault, str):
        raise ConfigError("fault.generator must be a string")

    return replace(
        cfg, n=n, a=a_vals, b=b_val, branches=branches, suites=suites,
        n_max=int(cut.get("n_max", cfg.n_max)),
        p_max=int(cut.get("p_max", cfg.p_max)),
        grid_points=int((grid or {}).get("points", cfg.grid_points)),
        grid_defaulted=grid is None,
        eig_levels=int((grid or {}).get("eig_levels", cfg.eig_levels)),
        eig_rel_tol=float(tol.get("eig_rel", cfg.eig_rel_tol)),
        residual_tol=float(tol.get("residual", cfg.residual_tol)),
        spectra_rel_tol=float(tol.get("spectra_rel", cfg.spectra_rel_tol)),
        fault=fault,
    )


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    """Everything one command run produced, ready for serialization."""

    command: str
    config: dict
    checks: list = field(default_factory=list)
    spectra: list = field(default_factory=list)
    oracles: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    total_seconds: float = 0.0

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c["status"] != "pass")

    @property
    def status(self) -> str:
        return "fail" if self.failed else "pass"

    def to_dict(self, timings: bool = False) -> dict:
        cfg_text = json.dumps(self.config, sort_keys=True)
        out = {
            "schema_version": SCHEMA_VERSION,
            "tool": {"name": "swalg", "version": __version__},
            "command": self.command,
            "config": self.config,
            "config_digest": hashlib.sha256(
                cfg_text.encode()).hexdigest()[:16],
            "checks": self.checks,
            "spectra": self.spectra,
            "oracles": self.oracles,
            "notes": self.notes,
            "summary": {"checks_total": len(self.checks),
                        "checks_failed": self.failed,
                        "status": self.status},
        }
        if timings:
            out["total_seconds"] = self.total_seconds
        return out


def _fixed(value):
    """Round floats to 12 significant digits for stable serialization."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return _num_repr(value)
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, (np.floating,)):
        return float(f"{float(value):.12g}")
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, dict):
        return {str(k): _fixed(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fixed(v) for v in value]
    return value


def render_json(report: CheckReport, timings: bool = False) -> str:
    return json.dumps(_fixed(report.to_dict(timings)), sort_keys=True,
                      indent=2) + "\n"


def render_markdown(report: CheckReport, timings: bool = False) -> str:
    data = _fixed(report.to_dict(timings))
    lines = [f"# swalg {data['command']} report",
             "",
             f"- tool: swalg {data['tool']['version']} "
             f"(schema {data['schema_version']})",
             f"- config digest: `{data['config_digest']}`",
             f"- status: **{data['summary']['status']}** "
             f"({data['summary']['checks_failed']} of "
             f"{data['summary']['checks_total']} checks failed)",
             ""]
    if data["checks"]:
        lines += ["| suite | check | indices | status | detail |",
                  "|---|---|---|---|---|"]
        for c in data["checks"]:
            idx = ",".join(str(i) for i in c.get("indices", []))
            detail = c.get("detail", "")
            lines.append(f"| {c['suite']} | {c['name']} | {idx} "
                         f"| {c['status']} | {detail} |")
        lines.append("")
    for table in data["spectra"]:
        lines += [f"## spectrum ({table['label']})", "",
                  f"- routes agree: {table['routes_agree']} "
                  f"(arithmetic: {table['arithmetic']})",
                  f"- states up to cutoff: {table['states']}", "",
                  "| E/sqrt(2b) | degeneracy |", "|---|---|"]
        for row in table["levels"]:
            lines.append(f"| {row['reduced_energy']} | {row['count']} |")
        lines.append("")
    for block in data["oracles"]:
        lines.append(f"- oracle `{block['name']}`: {block['status']}")
    for note in data["notes"]:
        lines.append(f"- note: {note}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# fault injection (test hook for the exit-code contract)
# ---------------------------------------------------------------------------

def _inject_fault(gs: GeneratorSet, token: str) -> None:
    """Corrupt one generator in place by adding the identity."""
    bump = Operator.identity(gs.n)
    if token == "H":
        gs.H = gs.H + bump
        return
    kind, idx = token[0], token[1:]
    if kind == "B" and idx.isdigit() and int(idx) in gs.B:
        gs.B[int(idx)] = gs.B[int(idx)] + bump
        return
    if kind == "A" and len(idx) == 2 and idx.isdigit():
        key = (int(idx[0]), int(idx[1]))
        if key in gs.A:
            gs.A[key] = gs.A[key] + bump
            return
    raise ConfigError(f"fault target {token!r} not recognized "
                      "(use H, B<i>, or A<ij>)")


# ---------------------------------------------------------------------------
# verify: exact symbolic suites
# ---------------------------------------------------------------------------

def _suite_of(name: str) -> str:
    if "casimir" in name:
        return "casimirs"
    if name.startswith("qij"):
        return "substructures"
    if name.startswith(("chain", "top")):
        return "racah_chain"
    if name.startswith("su11") or name == "full_sum_identity":
        return "su11"
    return "sw_relations"


_WORKER_CACHE: dict = {}


def _worker_generators(n: int, fault: str | None) -> GeneratorSet:
    key = (n, fault)
    gs = _WORKER_CACHE.get(key)
    if gs is None:
        gs = build_generators(n)
        if fault:
            _inject_fault(gs, fault)
        _WORKER_CACHE[key] = gs
    return gs


def _run_verify_task(args) -> list[dict]:
    n, fault, selected, task = args
    gs = _worker_generators(n, fault)
    kind = task[0]
    if kind == "relations":
        checks = verify_sw_relations(gs, names=[task[1]])
    elif kind == "pair":
        checks = verify_substructure_qij(gs, task[1], task[2])
    elif kind == "chain":
        checks = verify_chain_substructure(gs, task[1])
    elif kind == "top":
        checks = verify_top_substructure(gs)
    else:
        checks = verify_su11(gs)
    out = []
    for rc in checks:
        suite = _suite_of(rc.name)
        if suite not in selected:
            continue
        out.append({"suite": suite, "name": rc.name,
                    "indices": list(rc.indices),
                    "status": "pass" if rc.passed else "fail",
                    "residual_terms": rc.residual_terms})
    return out


def _thread_count() -> int:
    raw = os.environ.get("SWALG_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_verify(config: RunConfig) -> CheckReport:
    selected = set(config.suites) & SYMBOLIC_SUITES
    if not selected:
        raise ConfigError("verify needs at least one symbolic suite")
    t0 = time.perf_counter()

    tasks: list[tuple] = []
    if selected & {"sw_relations"}:
        tasks += [("relations", rel.name) for rel in relation_catalog()]
    if selected & {"substructures", "casimirs"}:
        tasks += [("pair", i, j)
                  for i, j in permutations(range(1, config.n + 1), 2)]
    if selected & {"racah_chain", "casimirs"}:
        tasks += [("chain", i) for i in range(2, config.n)]
        tasks.append(("top",))
    if selected & {"su11"}:
        tasks.append(("su11",))

    payload = [(config.n, config.fault, selected, t) for t in tasks]
    workers = _thread_count()
    if workers > 1 and len(payload) > 1:
        import multiprocessing as mp
        ctx = mp.get_context("fork")
        with ctx.Pool(min(workers, len(payload))) as pool:
            chunks = pool.map(_run_verify_task, payload)
    else:
        chunks = [_run_verify_task(item) for item in payload]

    report = CheckReport("verify", config.echo())
    for chunk in chunks:
        report.checks.extend(chunk)
    if config.fault:
        report.notes.append(f"fault injected into {config.fault}")
    report.total_seconds = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# derive: spectra through all four routes
# ---------------------------------------------------------------------------

def _branch_assignments(config: RunConfig) -> list[tuple]:
    """Enumerate branch sign vectors: coordinates inside the two-branch
    coupling window get both signs, the rest keep the configured sign."""
    choices = []
    for a_i, eps in zip(config.a, config.branches):
        if _WINDOW_LO < a_i < _WINDOW_HI:
            choices.append((1, -1))
        else:
            choices.append((eps,))
    out = [()]
    for ch in choices:
        out = [prev + (e,) for prev in out for e in ch]
    return out


def _branch_label(branches) -> str:
    return "".join("+" if e > 0 else "-" for e in branches)


def cmd_derive(config: RunConfig) -> CheckReport:
    if "spectra" not in config.suites:
        raise ConfigError("derive needs the spectra suite")
    t0 = time.perf_counter()
    report = CheckReport("derive", config.echo())

    if config.exact:
        nus = nu_values(config.a)
    else:
        nus = [math.sqrt(1.0 + 8.0 * float(a)) / 2.0 for a in config.a]
    all_exact = all(isinstance(v, Fraction) for v in nus)
    if config.exact and not all_exact:
        report.notes.append("exact mode: some couplings have irrational "
                            "barrier exponents; those spectra use floats")

    routes = (("cartesian", spectrum_cartesian),
              ("pairwise", spectrum_pairwise),
              ("hyperspherical", spectrum_hyperspherical),
              ("chain", spectrum_chain))
    s_float = math.sqrt(2.0 * float(config.b))

    for branches in _branch_assignments(config):
        label = _branch_label(branches)
        tables = {name: fn(nus, branches, config.n_max)
                  for name, fn in routes}
        reference = tables["cartesian"]
        agree = True
        for name, _fn in routes[1:]:
            if config.exact and all_exact:
                ok = tables[name] == reference
            else:
                ok = spectra_agree(tables[name], reference,
                                   rel_tol=config.spectra_rel_tol)
            agree = agree and ok
            report.checks.append({
                "suite": "spectra", "name": f"route[{name}=cartesian]",
                "indices": [], "status": "pass" if ok else "fail",
                "detail": label})
        levels = group_levels([float(e) for e in reference])
        report.spectra.append({
            "label": label,
            "arithmetic": "rational" if (config.exact and all_exact)
                          else "float",
            "routes_agree": agree,
            "states": len(reference),
            "scale_sqrt_2b": s_float,
            "levels": [{"reduced_energy": e, "energy": e * s_float,
                        "count": c} for e, c in levels[:12]],
        })
    report.total_seconds = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# numcheck: finite-difference oracles
# ---------------------------------------------------------------------------

def cmd_numcheck(config: RunConfig) -> CheckReport:
    if "numeric" not in config.suites:
        raise ConfigError("numcheck needs the numeric suite")
    for i, a_i in enumerate(config.a, start=1):
        if a_i < 0:
            raise ConfigError(f"a[{i}] must be nonnegative for the "
                              "finite-difference oracle")
    t0 = time.perf_counter()
    report = CheckReport("numcheck", config.echo())
    if config.grid_defaulted:
        report.notes.append("grid section missing; defaults applied")
    b_f = float(config.b)
    s = math.sqrt(2.0 * b_f)
    scale = (2.0 * b_f) ** -0.25
    nus = [math.sqrt(1.0 + 8.0 * float(a)) / 2.0 for a in config.a]

    # eigenvalues of each one-coordinate operator
    for i, (a_i, nu) in enumerate(zip(config.a, nus), start=1):
        res = fd_eigen_1d(a_i, config.b, num_levels=config.eig_levels,
                          points=config.grid_points)
        if float(a_i) > 0:
            exact = [2 * s * (2 * q + nu + 1)
                     for q in range(config.eig_levels)]
        else:
            exact = [s * (2 * m + 1) for m in range(config.eig_levels)]
        rel = max(abs(lv - ex) / ex for lv, ex in zip(res.levels, exact))
        ratios_ok = all(config.ratio_window[0] <= r <= config.ratio_window[1]
                        for r in res.ratios)
        ok = rel <= config.eig_rel_tol and ratios_ok
        report.checks.append({
            "suite": "numeric", "name": "fd_eigen", "indices": [i],
            "status": "pass" if ok else "fail",
            "detail": f"rel={rel:.3e}",
            "max_rel_error": rel,
            "ratios": [float(r) for r in res.ratios]})
        report.oracles.append({
            "name": f"fd_eigen[{i}]", "status": "pass" if ok else "fail",
            "levels": [float(v) for v in res.levels],
            "algebraic": [float(v) for v in exact]})

    # residual of the full eigenvalue equation on a product state
    pattern = [2, 1, 3, 0]
    n_indices = [pattern[k % 4] for k in range(config.n)]
    pts = sample_box_points(config.n, config.residual_points, scale, seed=11)
    cart = cartesian_residual(config.a, config.b, n_indices,
                              [1] * config.n, pts)
    ok = cart <= config.residual_tol
    report.checks.append({
        "suite": "numeric", "name": "cartesian_residual", "indices": [],
        "status": "pass" if ok else "fail", "detail": f"max={cart:.3e}",
        "max_residual": cart, "points": int(pts.shape[0])})

    # separated solution: every angular level plus the radial equation
    taus = tuple(pattern[k % 4] for k in range(config.n - 1))
    sol = SeparatedSolution(a_values=tuple(config.a), b=b_f,
                            branches=(1,) * config.n, taus=taus, tau_r=2)
    thetas = np.linspace(0.25, 1.3, max(20, config.residual_points))
    for level in range(1, config.n):
        ang = angular_residual(sol, level, thetas)
        ok = ang <= config.residual_tol
        report.checks.append({
            "suite": "numeric", "name": "angular_residual",
            "indices": [level],
            "status": "pass" if ok else "fail", "detail": f"max={ang:.3e}",
            "max_residual": ang})
    rs = np.linspace(0.4 * scale, 2.2 * scale,
                     max(20, config.residual_points))
    rad = radial_residual(sol, rs)
    ok = rad <= config.residual_tol
    report.checks.append({
        "suite": "numeric", "name": "radial_residual", "indices": [],
        "status": "pass" if ok else "fail", "detail": f"max={rad:.3e}",
        "max_residual": rad})

    # degeneracy bookkeeping against direct enumeration
    def count_compositions(width: int, total: int) -> int:
        if width == 1:
            return 1
        return sum(count_compositions(width - 1, total - first)
                   for first in range(total + 1))

    worst = None
    ok = True
    for level in range(0, config.p_max + 1):
        expected = count_compositions(config.n, level)
        got = degeneracy_count(config.n, level)
        if got != expected:
            ok = False
            worst = (level, got, expected)
    report.checks.append({
        "suite": "numeric", "name": "degeneracy", "indices": [],
        "status": "pass" if ok else "fail",
        "detail": "exact" if ok else f"level {worst[0]}: "
                                     f"{worst[1]} != {worst[2]}"})

    report.total_seconds = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swalg",
        description="exact symmetry-algebra verification and algebraic "
                    "spectra for the oscillator with inverse-square "
                    "barriers")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
            ("verify", "run the exact symbolic suites"),
            ("derive", "derive spectra through all four routes"),
            ("numcheck", "run the finite-difference oracles")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--config", metavar="PATH",
                       help="TOML config file (defaults used if omitted)")
        p.add_argument("--n", type=int, metavar="N",
                       help="override the coordinate count")
        p.add_argument("--exact", action="store_true",
                       help="exact rational arithmetic where exponents "
                            "are rational")
        p.add_argument("--out", metavar="PATH",
                       help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "md"), default="json")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock data (breaks byte-for-byte "
                            "report stability)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        if args.n is not None:
            a_vals = config.a
            branches = config.branches
            if len(a_vals) != args.n:
                if len(set(a_vals)) == 1:
                    a_vals = (a_vals[0],) * args.n
                    branches = (branches[0],) * args.n
                else:
                    raise ConfigError("--n conflicts with the length of a")
            config = replace(config, n=args.n, a=a_vals, branches=branches)
        config = replace(config, exact=args.exact,
                         timings=args.timings).validate()
        command = {"verify": cmd_verify, "derive": cmd_derive,
                   "numcheck": cmd_numcheck}[args.command]
        report = command(config)
    except ConfigError as exc:
        print(f"swalg: config error: {exc}", file=sys.stderr)
        return 2

    text = (render_markdown(report, args.timings) if args.format == "md"
            else render_json(report, args.timings))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if report.failed:
        failing = next(c for c in report.checks if c["status"] != "pass")
        idx = ",".join(str(i) for i in failing["indices"])
        print(f"swalg: FAILED {failing['name']}"
              + (f"@{idx}" if idx else ""), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
