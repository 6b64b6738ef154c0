"""Command-line front end.

Subcommands: spectrum, shift, bounce, trajectory, thermo, verify.
Shared flags: --B0, --a, --R, --format, --out, --config.

Exit codes: 0 success, 1 verification or numerical failure, 2 usage or
configuration error.

A config file holds ``key = value`` lines (``#`` starts a comment) or a
JSON object; keys are the long flag names with dashes replaced by
underscores (``B0``, ``a``, ``R``, ``L_max``, ``kx``, ...). Flags given on
the command line override file values.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .classical import (
    bounce_time,
    bounce_time_closed_form,
    integrate_trajectory,
    mirror_initial_state,
)
from .field import MirrorField
from .oracle import GridSpec
from .perturbation import shift_report
from .spectra import (
    DEGENERATE_BOUND,
    FrequencyVariant,
    bounce_frequency,
    bounce_level_energy,
    landau_energy,
    max_bounce_level,
)
from .thermo import ThermoInput, bounce_susceptibility, log_partition_bounce
from .verify import run_acceptance

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# R = None resolves to 1 for a homogeneous field (a = 0) and 1.04 otherwise
FIELD_DEFAULTS = {"B0": 1.0, "a": 0.01, "R": None}
DEFAULT_MIRROR_RATIO = 1.04

# per-command defaults; also the set of keys a config file may set
COMMAND_DEFAULTS = {
    "spectrum": {"L_max": 2, "ell_max": 4, "format": "csv"},
    "shift": {"L": 0, "kx": 1.0, "with_eigensolver": False, "ny": 160, "nz": 48,
              "format": "json"},
    "bounce": {"mu": 0.5, "n_nodes": 64, "format": "json"},
    "trajectory": {"mu": 0.5, "steps": 5000, "dt": None, "gyrophase": 0.0,
                   "format": "csv"},
    "thermo": {"T": 1.0, "N": 1.0, "V": 1.0, "L": 0, "variant": "paper", "h": None,
               "format": "json"},
    "verify": {"quick": False, "format": "json"},
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Canonical parameters of one CLI run, merged from defaults, file and flags."""

    command: str
    field: MirrorField
    params: dict = field(default_factory=dict)
    fmt: str = "json"
    out: str = None

    @classmethod
    def from_sources(cls, command, flags, file_values=None):
        merged = dict(FIELD_DEFAULTS)
        merged.update(COMMAND_DEFAULTS[command])
        merged["out"] = ""
        for source in (file_values or {}, flags):
            for key, value in source.items():
                if value is None:
                    continue
                if key not in merged:
                    raise UsageError(f"unknown parameter {key!r} for {command}")
                merged[key] = _coerce(value, merged[key])
        if merged["R"] is None:
            merged["R"] = 1.0 if merged["a"] == 0 else DEFAULT_MIRROR_RATIO
        try:
            f = MirrorField(merged.pop("B0"), merged.pop("a"), merged.pop("R"))
        except (TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        fmt = merged.pop("format")
        if fmt not in ("json", "csv"):
            raise UsageError(f"unknown format {fmt!r}")
        out = merged.pop("out") or None
        return cls(command, f, merged, fmt, out)


def _coerce(value, default):
    if not isinstance(value, str):
        return value
    if isinstance(default, bool):
        if value.lower() in ("1", "true", "yes", "on"):
            return True
        if value.lower() in ("0", "false", "no", "off"):
            return False
        raise UsageError(f"expected a boolean, got {value!r}")
    try:
        if isinstance(default, int):
            return int(value)
        if isinstance(default, float) or default is None:
            return float(value)
    except ValueError:
        raise UsageError(f"expected a number, got {value!r}") from None
    return value


def read_config(path):
    """Parse a ``key = value`` file or a JSON object into a dict of strings/values."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad JSON config: {exc}") from None
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _fmt(value):
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


def render_table(columns, rows, fmt):
    if fmt == "json":
        return json.dumps([dict(zip(columns, row)) for row in rows], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if v is None else _fmt(v) for v in row])
    return buf.getvalue()


def render_record(record, fmt):
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    flat = _flatten(record)
    return render_table(list(flat), [list(flat.values())], "csv")


def _flatten(record, prefix=""):
    out = {}
    for key, value in record.items():
        if isinstance(value, dict):
            out.update(_flatten(value, f"{prefix}{key}."))
        else:
            out[prefix + key] = value
    return out


def cmd_spectrum(cfg):
    p, f = cfg.params, cfg.field
    if p["L_max"] < 0 or p["ell_max"] < 0:
        raise UsageError("--L-max and --ell-max must be non-negative")
    columns = ["L", "ell", "eps_L", "omega_paper", "omega_oscillator",
               "eps_ell_paper", "eps_ell_oscillator", "ell_max"]
    rows = []
    for L in range(p["L_max"] + 1):
        w_p = bounce_frequency(f, L, FrequencyVariant.PAPER)
        w_o = bounce_frequency(f, L, FrequencyVariant.OSCILLATOR)
        if f.a == 0:
            bound = "unbounded"
        else:
            bound = max_bounce_level(f, L, FrequencyVariant.PAPER)
            bound = "degenerate" if bound is DEGENERATE_BOUND else bound
        for ell in range(p["ell_max"] + 1):
            rows.append([
                L, ell, landau_energy(f, L), w_p, w_o,
                bounce_level_energy(f, L, ell, FrequencyVariant.PAPER, warn=False),
                bounce_level_energy(f, L, ell, FrequencyVariant.OSCILLATOR, warn=False),
                bound,
            ])
    return render_table(columns, rows, cfg.fmt)


def cmd_shift(cfg):
    p, f = cfg.params, cfg.field
    grid = None
    if p["with_eigensolver"] and f.a > 0:
        osc = 1.0 / math.sqrt(f.omega_c)
        grid = GridSpec(f.z_m, p["nz"], osc * max(8.0, math.sqrt(2 * p["L"] + 1) + 6.0),
                        p["ny"], p["kx"] / f.omega_c)
    report = shift_report(f, p["kx"], p["L"], p["with_eigensolver"], grid)
    record = {"field": f.to_dict(), "L": p["L"], "kx": p["kx"], **report.to_dict()}
    return render_record(record, cfg.fmt)


def cmd_bounce(cfg):
    p, f = cfg.params, cfg.field
    tau_q = bounce_time(f, p["mu"], p["n_nodes"])
    tau_c = bounce_time_closed_form(f, p["mu"])
    record = {
        "field": f.to_dict(),
        "mu": p["mu"],
        "n_nodes": p["n_nodes"],
        "tau_b_quadrature": tau_q,
        "tau_b_closed_form": tau_c,
        "omega_b_quadrature": 2 * math.pi / tau_q,
        "omega_b_closed_form": 2 * math.pi / tau_c,
    }
    return render_record(record, cfg.fmt)


def cmd_trajectory(cfg):
    p, f = cfg.params, cfg.field
    if p["steps"] < 1:
        raise UsageError("--steps must be at least 1")
    q0, v0 = mirror_initial_state(f, p["mu"], p["gyrophase"])
    traj = integrate_trajectory(f, q0, v0, p["dt"], p["steps"])
    if cfg.fmt == "csv":
        return traj.to_csv()
    record = {
        "field": f.to_dict(),
        "t": traj.times.tolist(),
        "position": traj.positions.tolist(),
        "velocity": traj.velocities.tolist(),
        "mu": traj.mu_series.tolist(),
        "energy": traj.energy_series.tolist(),
    }
    return json.dumps(record) + "\n"


def cmd_thermo(cfg):
    p, f = cfg.params, cfg.field
    inp = ThermoInput(p["N"], p["V"], p["T"], p["L"])
    record = {
        "log_Z_b": log_partition_bounce(inp, f, p["variant"]),
        "chi_b": bounce_susceptibility(inp, f, p["variant"], p["h"]),
        "parameters": {**f.to_dict(), "N": inp.N, "V": inp.V, "T": inp.T, "L": inp.L,
                       "variant": FrequencyVariant(p["variant"]).value},
    }
    return render_record(record, cfg.fmt)


COMMANDS = {
    "spectrum": cmd_spectrum,
    "shift": cmd_shift,
    "bounce": cmd_bounce,
    "trajectory": cmd_trajectory,
    "thermo": cmd_thermo,
}


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--B0", type=float, help="field at the minimum (default 1)")
    shared.add_argument("--a", type=float, help="field curvature (default 0.01)")
    shared.add_argument("--R", type=float,
                        help="mirror ratio (default 1.04, or 1 when a = 0)")
    shared.add_argument("--format", choices=["json", "csv"])
    shared.add_argument("--out", help="write output here instead of stdout")
    shared.add_argument("--config", help="key = value or JSON parameter file")

    parser = argparse.ArgumentParser(
        prog="mirrorbounce",
        description="Electrons in a parabolic magnetic mirror: spectra, shifts, "
        "bounce dynamics and thermodynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", parents=[shared], help="Landau and bounce levels")
    s.add_argument("--L-max", type=int)
    s.add_argument("--ell-max", type=int)

    s = sub.add_parser("shift", parents=[shared], help="first-order Landau shift report")
    s.add_argument("--L", type=int)
    s.add_argument("--kx", type=float)
    s.add_argument("--with-eigensolver", action="store_true", default=None)
    s.add_argument("--ny", type=int)
    s.add_argument("--nz", type=int)

    s = sub.add_parser("bounce", parents=[shared], help="classical bounce period")
    s.add_argument("--mu", type=float)
    s.add_argument("--n-nodes", type=int)

    s = sub.add_parser("trajectory", parents=[shared], help="Boris orbit in the mirror")
    s.add_argument("--mu", type=float)
    s.add_argument("--steps", type=int)
    s.add_argument("--dt", type=float)
    s.add_argument("--gyrophase", type=float)

    s = sub.add_parser("thermo", parents=[shared], help="bounce partition function")
    s.add_argument("--T", type=float)
    s.add_argument("--N", type=float)
    s.add_argument("--V", type=float)
    s.add_argument("--L", type=int)
    s.add_argument("--variant", choices=[v.value for v in FrequencyVariant])
    s.add_argument("--h", type=float, help="field step for the second difference")

    s = sub.add_parser("verify", parents=[shared], help="run the acceptance checklist")
    s.add_argument("--quick", action="store_true", default=None,
                   help="skip the 2D eigensolves")
    return parser


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    flags = {k: v for k, v in vars(args).items() if k not in ("command", "config")}
    try:
        file_values = read_config(args.config) if args.config else None
        cfg = RunConfig.from_sources(args.command, flags, file_values)
        if cfg.command == "verify":
            results = run_acceptance(quick=cfg.params["quick"], report=print)
            if cfg.out:
                _emit(json.dumps([r.__dict__ for r in results], indent=2) + "\n", cfg.out)
            return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
        _emit(COMMANDS[cfg.command](cfg), cfg.out)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"{parser.prog} {args.command}: failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
