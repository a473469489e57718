"""Command-line runner for the named scenarios.

    multitime list
    multitime run CONFIG [--output-dir DIR] [--seed N]

Exit codes: 0 all checks pass, 1 a check failed, 2 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from .config import ConfigError, ScenarioConfig, load_config
from .scenarios import SCENARIOS, Outcome
from .tolerances import TOLERANCES

GLOBAL_KEYS = {"scenario", "seed", "output_dir"}

USAGE_DEFAULTS = """\
config file: one 'key = value' per line, '#' comments, dotted keys allowed.
  scenario = <name>          required, see 'multitime list'
  seed = 42                  unsigned 64-bit, seeds the Philox probe stream
  output_dir = out           CSV tables and summary.json go here
  tolerance.<name> = <x>     override a pass threshold
  any scenario parameter (defaults listed by 'multitime list --verbose')
"""


def list_scenarios(verbose: bool = False) -> str:
    width = max(len(n) for n in SCENARIOS)
    lines = []
    for name, sc in SCENARIOS.items():
        lines.append(f"{name:<{width}}  {sc.anchor}")
        if verbose:
            for k, v in sc.defaults.items():
                lines.append(f"{'':<{width}}    {k} = {_format_param(v)}")
    return "\n".join(lines)


def _format_param(v) -> str:
    if isinstance(v, tuple):
        return ", ".join(str(x) for x in v)
    return str(v)


def build_config(raw: dict, output_dir: str | None = None, seed: int | None = None) -> ScenarioConfig:
    name = raw.get("scenario")
    if name not in SCENARIOS:
        valid = ", ".join(SCENARIOS)
        raise ConfigError(f"unknown or missing scenario {name!r}; valid names: {valid}")
    defaults = SCENARIOS[name].defaults
    params = dict(defaults)
    tolerances = {}
    for key, value in raw.items():
        if key in GLOBAL_KEYS:
            continue
        if key.startswith("tolerance."):
            tname = key.split(".", 1)[1]
            if tname not in TOLERANCES or not isinstance(value, (int, float)):
                raise ConfigError(f"bad tolerance override {key} = {value!r}")
            tolerances[tname] = float(value)
        elif key in defaults:
            params[key] = _coerce(key, value, defaults[key])
        else:
            raise ConfigError(f"unknown key {key!r} for scenario {name}")
    cfg_seed = raw.get("seed", 42) if seed is None else seed
    if not isinstance(cfg_seed, int) or not 0 <= cfg_seed < 2**64:
        raise ConfigError(f"seed must be an unsigned 64-bit integer, got {cfg_seed!r}")
    out = output_dir if output_dir is not None else str(raw.get("output_dir", "out"))
    return ScenarioConfig(name, cfg_seed, out, params, tolerances)


def _coerce(key: str, value, default):
    if isinstance(default, bool):
        if not isinstance(value, bool):
            raise ConfigError(f"{key} expects true/false, got {value!r}")
        return value
    if isinstance(default, int):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConfigError(f"{key} expects an integer, got {value!r}")
        return value
    if isinstance(default, float):
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ConfigError(f"{key} expects a number, got {value!r}")
        return float(value)
    if isinstance(default, tuple):
        value = value if isinstance(value, tuple) else (value,)
        if not all(isinstance(v, (int, float)) for v in value):
            raise ConfigError(f"{key} expects a comma-separated list of numbers, got {value!r}")
        return value
    if not isinstance(value, str):
        raise ConfigError(f"{key} expects a string, got {value!r}")
    return value


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def write_outputs(cfg: ScenarioConfig, outcome: Outcome, duration_ms: float) -> Path:
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    for table, (headers, rows) in outcome.tables.items():
        with open(out / f"{cfg.scenario}_{table}.csv", "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(headers)
            for row in rows:
                writer.writerow([_cell(v) for v in row])
    summary = {
        "scenario": cfg.scenario,
        "config": cfg.echo(),
        "metrics": outcome.metrics,
        "checks": outcome.checks,
        "pass": outcome.passed,
        "duration_ms": round(duration_ms, 3),
    }
    with open(out / "summary.json", "w") as fh:
        json.dump(summary, fh, indent=2, default=_json_default)
        fh.write("\n")
    return out


def _json_default(o):
    if hasattr(o, "item"):
        return o.item()
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def run(config_path: str, output_dir: str | None = None, seed: int | None = None) -> int:
    try:
        cfg = build_config(load_config(config_path), output_dir, seed)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    tol = dict(TOLERANCES)
    tol.update(cfg.tolerances)
    start = time.perf_counter()
    try:
        outcome = SCENARIOS[cfg.scenario].run(cfg.params, cfg.seed, tol)
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    duration = (time.perf_counter() - start) * 1000
    write_outputs(cfg, outcome, duration)
    for name, ok in outcome.checks.items():
        print(f"{'PASS' if ok else 'FAIL'}  {cfg.scenario}: {name}")
    failed = [n for n, ok in outcome.checks.items() if not ok]
    if failed:
        print(f"failed invariants: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="multitime",
        description="Run multi-time vs. ultrahyperbolic evolution experiments.",
        epilog=USAGE_DEFAULTS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_list = sub.add_parser("list", help="print the scenario catalog")
    p_list.add_argument("--verbose", action="store_true", help="also print default parameters")
    p_run = sub.add_parser("run", help="run one scenario from a config file")
    p_run.add_argument("config")
    p_run.add_argument("--output-dir", default=None)
    p_run.add_argument("--seed", type=_u64, default=None)
    args = parser.parse_args(argv)
    if args.command == "list":
        print(list_scenarios(args.verbose))
        return 0
    return run(args.config, args.output_dir, args.seed)


if __name__ == "__main__":
    sys.exit(main())
