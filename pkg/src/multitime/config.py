"""Flat ``key = value`` run configuration.

One assignment per line, ``#`` starts a comment, keys may be dotted
(``grid.n_points = 64``). Values are read as int, float, ``true``/``false``,
comma-separated number lists, or bare strings (optionally quoted).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


class ConfigError(ValueError):
    pass


def _parse_value(text: str):
    text = text.strip()
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "\"'":
        return text[1:-1]
    low = text.lower()
    if low in ("true", "false"):
        return low == "true"
    if "," in text:
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return tuple(_number(p) for p in parts)
        except ValueError:
            return tuple(parts)
    try:
        return _number(text)
    except ValueError:
        return text


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_config_text(text: str) -> dict:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key or any(c.isspace() for c in key):
            raise ConfigError(f"line {lineno}: malformed key {key!r}")
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        out[key] = _parse_value(value)
    return out


@dataclass
class ScenarioConfig:
    scenario: str
    seed: int = 42
    output_dir: str = "out"
    params: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)

    def echo(self) -> dict:
        d = {"scenario": self.scenario, "seed": self.seed, "output_dir": self.output_dir}
        d.update(self.params)
        d.update({f"tolerance.{k}": v for k, v in self.tolerances.items()})
        return d


def load_config(path: str | Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config_text(text)
