"""``mfao`` command-line front end.

Exit codes: 0 success, 1 validation failure, 2 bad arguments or
configuration, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import configparser
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .bogoliubov import BcsAngles
from .classical import equivalence_check
from .fock import BASIS_LABELS, ModelParams, StateVector, evolve_exact, expectation, hamiltonian, observable, spectrum
from .io import FORMATS, Table, serialize, trajectory_table
from .meanfield import METHODS, Occupations, integrate
from .symmetry import probe_all_kinds
from .validation import run_validation

COMMANDS = ("spectrum", "evolve-exact", "evolve-meanfield", "symmetry-report", "classical-check", "validate")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

DEFAULTS = {
    "hbar_omega": 1.0,
    "u": 0.5,
    "gbb": 0.25,
    "theta0": 0.0,
    "phi0": 0.0,
    "gamma0": 0.0,
    "xi0": 0.0,
    "p1": 0.0,
    "p2": 0.0,
    "state": "1,1,1,1",
    "t_end": 10.0,
    "steps": 100,
    "method": "closed_form",
    "format": "csv",
    "out": None,
    "label": "run",
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams
    angles: BcsAngles
    occupations: Occupations
    state: StateVector
    t_end: float
    steps: int
    method: str
    format: str
    out: str | None
    label: str

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_end, self.steps + 1)


def parse_complex(text: str) -> complex:
    """``re`` or ``re:im``."""
    parts = text.strip().split(":")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ConfigError(f"bad complex amplitude {text!r}")


def parse_state(text: str) -> list[complex]:
    items = [s for s in text.split(",") if s.strip()]
    if len(items) != 4:
        raise ConfigError(f"--state needs 4 amplitudes, got {len(items)}")
    try:
        return [parse_complex(s) for s in items]
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def read_config_file(path: str) -> dict:
    """Flat ``key = value`` file; keys use flag names with or without dashes."""
    parser = configparser.ConfigParser()
    with open(path, encoding="utf-8") as fh:
        parser.read_string("[run]\n" + fh.read())
    out = {}
    for key, value in parser["run"].items():
        name = key.replace("-", "_")
        if name not in DEFAULTS:
            raise ConfigError(f"unknown config key {key!r}")
        out[name] = value
    return out


def build_config(ns: argparse.Namespace) -> RunConfig:
    merged = dict(DEFAULTS)
    if ns.config:
        merged.update(read_config_file(ns.config))
    merged.update({k: v for k, v in vars(ns).items() if k in DEFAULTS and v is not None})
    try:
        num = {k: float(merged[k]) for k in ("hbar_omega", "u", "gbb", "theta0", "phi0", "gamma0", "xi0", "p1", "p2", "t_end")}
        steps = int(merged["steps"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if steps < 1:
        raise ConfigError("steps must be >= 1")
    if num["t_end"] < 0:
        raise ConfigError("t-end must be >= 0")
    if merged["method"] not in METHODS:
        raise ConfigError(f"method must be one of {METHODS}")
    if merged["format"] not in FORMATS:
        raise ConfigError(f"format must be one of {FORMATS}")
    amps = merged["state"]
    if isinstance(amps, str):
        amps = parse_state(amps)
    try:
        return RunConfig(
            params=ModelParams(num["hbar_omega"], num["u"], num["gbb"]),
            angles=BcsAngles(num["theta0"], num["phi0"], num["gamma0"], num["xi0"]),
            occupations=Occupations(num["p1"], num["p2"]),
            state=StateVector(np.array(amps, dtype=complex)),
            t_end=num["t_end"],
            steps=steps,
            method=merged["method"],
            format=merged["format"],
            out=merged["out"],
            label=str(merged["label"]),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _meta(cfg: RunConfig, command: str, **extra) -> dict:
    meta = {
        "command": command,
        "label": cfg.label,
        "version": __version__,
        "params": {"hbar_omega": cfg.params.hbar_omega, "u": cfg.params.u, "gb_b": cfg.params.gb_b},
    }
    meta.update(extra)
    return meta


def cmd_spectrum(cfg: RunConfig) -> tuple[Table, int]:
    rows = [[k, BASIS_LABELS[k], e] for e, k in spectrum(cfg.params)]
    return Table(["index", "state", "energy"], rows, _meta(cfg, "spectrum")), EXIT_OK


def cmd_evolve_exact(cfg: RunConfig) -> tuple[Table, int]:
    h = hamiltonian(cfg.params)
    num, sz = observable("number"), observable("spin_z")
    columns = ["t"]
    for name in ("rho", "beta", "alpha", "tau"):
        columns += [f"{name}_re", f"{name}_im"]
    columns += ["number", "spin_z", "energy"]
    rows = []
    for t in cfg.times():
        s = evolve_exact(cfg.state, cfg.params, float(t))
        row = [float(t)]
        for c in s.amplitudes:
            row += [float(c.real), float(c.imag)]
        row += [expectation(num, s).real, expectation(sz, s).real, expectation(h, s).real]
        rows.append(row)
    meta = _meta(cfg, "evolve-exact", method="closed_form", renormalized=cfg.state.renormalized)
    return Table(columns, rows, meta), EXIT_OK


def cmd_evolve_meanfield(cfg: RunConfig) -> tuple[Table, int]:
    traj = integrate(cfg.angles, cfg.occupations, cfg.params, cfg.times(), cfg.method)
    meta = _meta(cfg, "evolve-meanfield", method=cfg.method)
    return trajectory_table(traj, meta), EXIT_OK


def cmd_symmetry_report(cfg: RunConfig) -> tuple[Table, int]:
    columns = [
        "kind", "classification", "number_conserved", "spin_conserved",
        "number_commutator_norm", "spin_commutator_norm", "has_dynamics",
        "theta", "phi", "gamma", "xi",
    ]
    rows = []
    for row in probe_all_kinds(cfg.params):
        r, a = row.report, row.angles
        rows.append([
            row.kind.name.lower(), r.classification.value, r.number_conserved, r.spin_conserved,
            r.number_commutator_norm, r.spin_commutator_norm, row.has_dynamics,
            a.theta, a.phi, a.gamma, a.xi,
        ])
    return Table(columns, rows, _meta(cfg, "symmetry-report")), EXIT_OK


def cmd_classical_check(cfg: RunConfig) -> tuple[Table, int]:
    rep = equivalence_check(
        cfg.params, a0=cfg.angles, occ=cfg.occupations,
        t_end=cfg.t_end, steps=cfg.steps, method=cfg.method,
    )
    fields = asdict(rep)
    table = Table(list(fields), [list(fields.values())], _meta(cfg, "classical-check", method=cfg.method))
    return table, EXIT_OK if rep.passed else EXIT_FAILED


def cmd_validate(cfg: RunConfig) -> tuple[Table, int]:
    results = run_validation()
    rows = [[r.name, r.passed, r.deviation, r.tolerance] for r in results]
    ok = all(r.passed for r in results)
    table = Table(["check", "passed", "deviation", "tolerance"], rows, _meta(cfg, "validate", passed=ok))
    return table, EXIT_OK if ok else EXIT_FAILED


HANDLERS = {
    "spectrum": cmd_spectrum,
    "evolve-exact": cmd_evolve_exact,
    "evolve-meanfield": cmd_evolve_meanfield,
    "symmetry-report": cmd_symmetry_report,
    "classical-check": cmd_classical_check,
    "validate": cmd_validate,
}


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mfao", description="Magnetic fermionic anharmonic oscillator toolkit.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--hbar-omega", dest="hbar_omega", type=float)
    ap.add_argument("--u", type=float)
    ap.add_argument("--gbb", type=float, help="product of magnetic coupling and field")
    for name in ("theta0", "phi0", "gamma0", "xi0"):
        ap.add_argument(f"--{name}", type=float)
    ap.add_argument("--p1", type=float)
    ap.add_argument("--p2", type=float)
    ap.add_argument("--state", help="four amplitudes R,B,A,T; complex ones as re:im")
    ap.add_argument("--t-end", dest="t_end", type=float)
    ap.add_argument("--steps", type=int)
    ap.add_argument("--method", choices=METHODS)
    ap.add_argument("--format", choices=FORMATS)
    ap.add_argument("--out")
    ap.add_argument("--label", help="run label recorded in the output metadata")
    ap.add_argument("--config", help="key = value file; flags override it")
    return ap


def main(argv=None) -> int:
    ns = make_parser().parse_args(argv)
    try:
        cfg = build_config(ns)
    except OSError as exc:
        print(f"mfao: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, ValueError, configparser.Error) as exc:
        print(f"mfao: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE

    table, status = HANDLERS[ns.command](cfg)
    data = serialize(table, cfg.format)
    try:
        if cfg.out:
            with open(cfg.out, "wb") as fh:
                fh.write(data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
    except OSError as exc:
        print(f"mfao: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    if status == EXIT_FAILED:
        print(f"mfao: {ns.command} reported failures", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
