"""Command-line runner: JSON-configured experiments and file emission.

Subcommands: ``simulate`` (one walk; series and optional spacetime CSV),
``sweep`` (Cartesian parameter grid; aggregate CSV plus a metadata
sidecar), ``amplitudes`` (hop-probability table), ``circuit`` (OpenQASM
export plus a depth table), ``verify`` (built-in invariant suite).

Configs are single JSON documents discriminated by a ``mode`` field.  The
engine is deterministic and floats are written with shortest round-trip
formatting, so re-running a config reproduces its outputs byte for byte.
Exit codes: 0 success, 2 config error, 3 I/O error, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Any

from .amplitudes import emit_profile, infinite_limit_prob
from .circuit import build_step_circuit, depth_and_counts, export_qasm
from .evolution import WalkParams
from .observables import observable_series, zb_metrics
from .state import InitialCondition, display_coord, display_order
from .verify import run_all

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_VERIFY = 4

DEFAULT_PROFILE_DTS = [1.0, 0.75, 0.5, 0.25]
DEFAULT_DEPTH_SITES = [2**n for n in range(3, 11)]


class ConfigError(Exception):
    """Invalid configuration; the message names the offending field."""


def _fmt(value: float) -> str:
    return repr(float(value))


def _is_power_of_two(n: Any) -> bool:
    return isinstance(n, int) and not isinstance(n, bool) and n >= 2 and n & (n - 1) == 0


def _require(cfg: dict, key: str) -> Any:
    if key not in cfg:
        raise ConfigError(f"{key} is required")
    return cfg[key]


def _number(value: Any, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{name} must be a number")
    return float(value)


def _sites(value: Any, name: str = "n_sites") -> int:
    if not _is_power_of_two(value):
        raise ConfigError(f"{name} must be a power of two >= 2")
    return value


def _steps(value: Any, name: str = "steps") -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ConfigError(f"{name} must be a non-negative integer")
    return value


def _parse_initial(cfg: dict) -> InitialCondition:
    obj = cfg.get("initial", {})
    if not isinstance(obj, dict):
        raise ConfigError("initial must be an object")
    spin_raw = obj.get("spin", [[1, 0], [0, 0]])
    try:
        (r_re, r_im), (l_re, l_im) = spin_raw
        spin = (complex(r_re, r_im), complex(l_re, l_im))
    except (TypeError, ValueError) as exc:
        raise ConfigError("initial.spin must be two [re, im] pairs") from exc
    position = obj.get("position", {"site": 0})
    if not isinstance(position, dict):
        raise ConfigError("initial.position must be an object")
    try:
        if "site" in position:
            site = position["site"]
            if isinstance(site, bool) or not isinstance(site, int):
                raise ConfigError("initial.position.site must be an integer")
            return InitialCondition(spin, site=site)
        if "gaussian" in position:
            g = position["gaussian"]
            center = _number(_require(g, "center"), "initial.position.gaussian.center")
            sigma = _number(_require(g, "sigma"), "initial.position.gaussian.sigma")
            return InitialCondition(spin, gaussian=(center, sigma))
    except ValueError as exc:
        raise ConfigError(f"initial: {exc}") from exc
    raise ConfigError("initial.position must contain 'site' or 'gaussian'")


def _parse_transient_skip(outputs: dict, total: int) -> int:
    raw = outputs.get("transient_skip")
    if raw is None:
        return total // 10
    if isinstance(raw, bool) or not isinstance(raw, int) or raw < 0:
        raise ConfigError("outputs.transient_skip must be a non-negative integer")
    if raw >= total:
        raise ConfigError("outputs.transient_skip leaves no retained samples")
    return raw


def _resolve(out_dir: str, path: Any, name: str) -> str:
    if not isinstance(path, str) or not path:
        raise ConfigError(f"{name} must be a non-empty path")
    resolved = path if os.path.isabs(path) else os.path.join(out_dir, path)
    parent = os.path.dirname(resolved)
    if parent:
        os.makedirs(parent, exist_ok=True)
    return resolved


def _load_config(args: argparse.Namespace, expected_mode: str, required: bool) -> dict:
    if args.config is None:
        if required:
            raise ConfigError("--config is required for this subcommand")
        return {"mode": expected_mode}
    with open(args.config, "r", encoding="utf-8") as f:
        try:
            cfg = json.load(f)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    mode = cfg.get("mode", expected_mode)
    if mode != expected_mode:
        raise ConfigError(f"mode is {mode!r} but the subcommand expects {expected_mode!r}")
    return cfg


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _load_config(args, "simulate", required=True)
    n_sites = _sites(_require(cfg, "n_sites"))
    dt = _number(_require(cfg, "dt"), "dt")
    if dt <= 0:
        raise ConfigError("dt must be positive")
    mass = _number(_require(cfg, "mass"), "mass")
    steps = _steps(_require(cfg, "steps"))
    ic = _parse_initial(cfg)
    if ic.site is not None and not 0 <= ic.site < n_sites:
        raise ConfigError("initial.position.site must lie in [0, n_sites)")
    outputs = cfg.get("outputs", {})
    if not isinstance(outputs, dict):
        raise ConfigError("outputs must be an object")
    series_path = _resolve(args.out_dir, outputs.get("series_path", "series.csv"),
                           "outputs.series_path")
    spacetime_raw = outputs.get("spacetime_path")
    skip = _parse_transient_skip(outputs, steps + 1)

    params = WalkParams(n_sites, dt, mass, steps)
    series = observable_series(ic, params, keep_positions=spacetime_raw is not None)

    with open(series_path, "w", encoding="utf-8", newline="") as f:
        f.write("t,entropy_bits,velocity,norm\n")
        for t, s, v, nrm in zip(series.times, series.entropy_bits,
                                series.velocities, series.norms):
            f.write(f"{_fmt(t)},{_fmt(s)},{_fmt(v)},{_fmt(nrm)}\n")
    print(f"wrote {series_path}")

    if spacetime_raw is not None:
        spacetime_path = _resolve(args.out_dir, spacetime_raw, "outputs.spacetime_path")
        order = display_order(n_sites)
        header = "t," + ",".join(f"x={display_coord(x, n_sites)}" for x in order)
        with open(spacetime_path, "w", encoding="utf-8", newline="") as f:
            f.write(header + "\n")
            for t, row in zip(series.times, series.positions):
                f.write(_fmt(t) + "," + ",".join(_fmt(row[x]) for x in order) + "\n")
        print(f"wrote {spacetime_path}")

    if steps + 1 - skip >= 8:  # oscillation summary needs a usable window
        metrics = zb_metrics(series.velocities, skip)
        print(
            f"mean entropy {series.entropy_bits[skip:].mean():.6f} bits, "
            f"oscillation amplitude {metrics.amplitude:.6f}, "
            f"dominant frequency {metrics.frequency:.6f} cycles/step"
        )
    return EXIT_OK


def _number_list(value: Any, name: str) -> list[float]:
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{name} must be a non-empty list")
    return [_number(v, name) for v in value]


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _load_config(args, "sweep", required=True)
    sites_raw = _require(cfg, "n_sites")
    if not isinstance(sites_raw, list) or not sites_raw:
        raise ConfigError("n_sites must be a non-empty list")
    sites = [_sites(n) for n in sites_raw]
    masses = _number_list(_require(cfg, "mass"), "mass")
    dts = _number_list(_require(cfg, "dt"), "dt")
    if any(dt <= 0 for dt in dts):
        raise ConfigError("dt entries must be positive")
    if len(sites) * len(masses) * len(dts) > 10_000:
        raise ConfigError("sweep grid exceeds 10000 runs")
    steps_raw = cfg.get("steps")
    shared_steps = None if steps_raw is None else _steps(steps_raw)
    ic = _parse_initial(cfg)
    if ic.site is not None and not 0 <= ic.site < min(sites):
        raise ConfigError("initial.position.site must lie in [0, n_sites) for every size")
    outputs = cfg.get("outputs", {})
    if not isinstance(outputs, dict):
        raise ConfigError("outputs must be an object")
    path = _resolve(args.out_dir, outputs.get("path", "sweep.csv"), "outputs.path")
    skip_raw = outputs.get("transient_skip")

    rows = []
    for n in sites:
        for mass in masses:
            for dt in dts:
                steps = shared_steps if shared_steps is not None else n
                skip = _parse_transient_skip(outputs, steps + 1)
                if steps + 1 - skip < 8:
                    raise ConfigError(
                        "steps too small for oscillation metrics "
                        "(need at least 8 retained samples per run)"
                    )
                series = observable_series(ic, WalkParams(n, dt, mass, steps))
                metrics = zb_metrics(series.velocities, skip)
                rows.append((n, mass, dt, float(series.entropy_bits[skip:].mean()),
                             metrics.amplitude, metrics.frequency))

    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write("n,mass,dt,mean_entropy_bits,zb_amplitude,zb_frequency\n")
        for n, mass, dt, mean_s, amp, freq in rows:
            f.write(f"{n},{_fmt(mass)},{_fmt(dt)},{_fmt(mean_s)},{_fmt(amp)},{_fmt(freq)}\n")
    meta = {
        "mode": "sweep",
        "n_sites": sites,
        "mass": masses,
        "dt": dts,
        "steps": shared_steps if shared_steps is not None else "per-run n_sites",
        "initial": {
            "spin": [[ic.spin[0].real, ic.spin[0].imag],
                     [ic.spin[1].real, ic.spin[1].imag]],
            "position": {"site": ic.site} if ic.site is not None
            else {"gaussian": {"center": ic.gaussian[0], "sigma": ic.gaussian[1]}},
        },
        "transient_skip": skip_raw if skip_raw is not None else "10% of series",
    }
    with open(path + ".meta.json", "w", encoding="utf-8", newline="") as f:
        json.dump(meta, f, indent=2, sort_keys=True)
        f.write("\n")
    print(f"wrote {path} ({len(rows)} rows)")
    return EXIT_OK


def _cmd_amplitudes(args: argparse.Namespace) -> int:
    cfg = _load_config(args, "amplitudes", required=False)
    n_sites = _sites(cfg.get("n_sites", 64))
    dts = _number_list(cfg.get("dts", DEFAULT_PROFILE_DTS), "dts")
    sign = cfg.get("sign", "+")
    if sign not in ("+", "-"):
        raise ConfigError("sign must be '+' or '-'")
    q_min, q_max = cfg.get("q_min"), cfg.get("q_max")
    for name, value in (("q_min", q_min), ("q_max", q_max)):
        if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
            raise ConfigError(f"{name} must be an integer")
    outputs = cfg.get("outputs", {})
    path = _resolve(args.out_dir, outputs.get("path", "amplitudes.csv"), "outputs.path")

    profiles = emit_profile(dts, n_sites, q_min, q_max, sign)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write("dt,q,re,im,prob,prob_infinite\n")
        for profile in profiles:
            for q, amp in zip(profile.offsets, profile.amplitudes):
                f.write(
                    f"{_fmt(profile.dt)},{q},{_fmt(amp.real)},{_fmt(amp.imag)},"
                    f"{_fmt(abs(amp) ** 2)},{_fmt(infinite_limit_prob(int(q), profile.dt, sign))}\n"
                )
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_circuit(args: argparse.Namespace) -> int:
    cfg = _load_config(args, "circuit", required=False)
    n_sites = _sites(cfg.get("n_sites", 16))
    dt = _number(cfg.get("dt", 1.0), "dt")
    if dt <= 0:
        raise ConfigError("dt must be positive")
    mass = _number(cfg.get("mass", math.pi / 4), "mass")
    depth_sites_raw = cfg.get("depth_sites", DEFAULT_DEPTH_SITES)
    if not isinstance(depth_sites_raw, list) or not depth_sites_raw:
        raise ConfigError("depth_sites must be a non-empty list")
    depth_sites = [_sites(n, "depth_sites") for n in depth_sites_raw]
    outputs = cfg.get("outputs", {})
    qasm_path = _resolve(args.out_dir, outputs.get("qasm_path", "step.qasm"),
                         "outputs.qasm_path")
    depth_path = _resolve(args.out_dir, outputs.get("depth_path", "depth.csv"),
                          "outputs.depth_path")

    circ = build_step_circuit(WalkParams(n_sites, dt, mass))
    with open(qasm_path, "w", encoding="utf-8", newline="") as f:
        f.write(export_qasm(circ))
    with open(depth_path, "w", encoding="utf-8", newline="") as f:
        f.write("n,depth,one_qubit,two_qubit\n")
        for n in depth_sites:
            counts = depth_and_counts(build_step_circuit(WalkParams(n, dt, mass)))
            f.write(f"{n},{counts['depth']},{counts['one_qubit']},{counts['two_qubit']}\n")
    print(f"wrote {qasm_path} and {depth_path}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_all()
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
    if all(r.passed for r in results):
        print(f"all {len(results)} checks passed")
        return EXIT_OK
    return EXIT_VERIFY


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracwalk",
        description="Continuous-time quantum walk engine for 1D Dirac dynamics",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = [
        ("simulate", "run one walk and write series/spacetime CSVs", _cmd_simulate),
        ("sweep", "run a parameter grid and write an aggregate CSV", _cmd_sweep),
        ("amplitudes", "write a hop-probability table", _cmd_amplitudes),
        ("circuit", "export a step circuit as OpenQASM plus a depth table", _cmd_circuit),
        ("verify", "run the built-in oracle/invariant suite", _cmd_verify),
    ]
    for name, help_text, func in specs:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="path to a JSON config")
        p.add_argument("--out-dir", default=".", help="base directory for outputs")
        p.add_argument("--seed", type=int, default=None,
                       help="reserved; the engine is deterministic")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command != "verify":
            os.makedirs(args.out_dir, exist_ok=True)
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
