"""Engine limits from defaults, an optional config file, and command-line flags.

The config file holds ``key = value`` lines; ``#`` starts a comment. Its
path comes from ``--config`` or the ``LADDERLAB_CONFIG`` environment
variable. Flags override the file, which overrides the defaults.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import ConfigError

ENV_VAR = "LADDERLAB_CONFIG"


@dataclass(frozen=True)
class Limits:
    window_cap: int = 10**7
    node_budget: int = 10**8
    workers: int = 1
    time_limit: float | None = None


def _parse_value(key: str, raw: str, line: int):
    raw = raw.strip()
    try:
        if key == "time_limit":
            if raw.lower() in ("none", ""):
                return None
            value = float(raw)
            if value <= 0:
                raise ValueError
            return value
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ConfigError(f"bad value {raw!r} for {key}", line, key) from None
    if value < 1:
        raise ConfigError(f"{key} must be positive", line, key)
    return value


def parse_config(text: str) -> dict:
    known = {f.name for f in fields(Limits)}
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"expected 'key = value', got {body!r}", lineno)
        key, raw = (part.strip() for part in body.split("=", 1))
        if key not in known:
            raise ConfigError(f"unknown key {key!r}", lineno, key)
        values[key] = _parse_value(key, raw, lineno)
    return values


def load_config(path: str | None = None, overrides: dict | None = None, env=None) -> Limits:
    env = os.environ if env is None else env
    path = path or env.get(ENV_VAR)
    limits = Limits()
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        limits = replace(limits, **parse_config(text))
    if overrides:
        limits = replace(limits, **{k: v for k, v in overrides.items() if v is not None})
    return limits
