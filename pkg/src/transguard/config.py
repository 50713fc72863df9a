"""JSON configuration; keys mirror the command-line flags, flags win."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .collapse import CollapseThresholds
from .pipeline import PipelineConfig
from .rules.post import PruneMode, PrunePolicy
from .rules.pre import parse_rules

# dotted key -> expected python type(s)
KNOWN_KEYS: dict[str, tuple[type, ...]] = {
    "rules": (str, list),
    "direction": (str,),
    "focal": (str,),
    "lang": (str,),
    "lenient": (bool,),
    "arr_threshold": (int,),
    "arr_pattern": (str,),
    "all_loops": (bool,),
    "prune.mode": (str,),
    "prune.normalize": (bool,),
    "translator.cmd": (str,),
    "translator.url": (str,),
    "timeout_s": (int, float),
    "seed": (int,),
    "mock.profiles": (str, list),
}
KNOWN_KEYS.update({f"collapse.{name}": (int, float) for name in CollapseThresholds.__dataclass_fields__})


class ConfigError(ValueError):
    pass


def flatten(data: Mapping[str, Any], prefix: str = "") -> dict[str, Any]:
    """``{"prune": {"mode": "count"}}`` and ``{"prune.mode": "count"}`` agree."""
    out: dict[str, Any] = {}
    for key, value in data.items():
        name = f"{prefix}{key}".replace("-", "_")
        if isinstance(value, Mapping):
            out.update(flatten(value, name + "."))
        else:
            out[name] = value
    return out


def load_config(path: str | Path | None) -> dict[str, Any]:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as err:
        raise ConfigError(f"cannot read config {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise ConfigError(f"config {path} is not valid JSON: {err}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    flat = flatten(data)
    for key, value in flat.items():
        if key not in KNOWN_KEYS:
            raise ConfigError(f"unknown config key {key!r}")
        types = KNOWN_KEYS[key]
        if not isinstance(value, types) or (isinstance(value, bool) and bool not in types):
            raise ConfigError(f"config key {key!r} has the wrong type")
    return flat


def merge(file_values: Mapping[str, Any], flag_values: Mapping[str, Any]) -> dict[str, Any]:
    """Flags that were given (not None) override the file."""
    out = dict(file_values)
    out.update({k: v for k, v in flag_values.items() if v is not None})
    return out


def pipeline_config(values: Mapping[str, Any]) -> PipelineConfig:
    try:
        rules = parse_rules(values.get("rules", "all"))
        prune = PrunePolicy(
            mode=PruneMode(values.get("prune.mode", PruneMode.COUNT.value)),
            normalize=bool(values.get("prune.normalize", True)),
        )
        thresholds = CollapseThresholds.from_mapping(
            {k.split(".", 1)[1]: v for k, v in values.items() if k.startswith("collapse.")}
        )
    except (KeyError, ValueError) as err:
        raise ConfigError(str(err)) from None
    defaults = PipelineConfig()
    return PipelineConfig(
        rules=rules,
        arr_pattern=values.get("arr_pattern", defaults.arr_pattern),
        arr_threshold=int(values.get("arr_threshold", defaults.arr_threshold)),
        all_loops=bool(values.get("all_loops", False)),
        prune=prune,
        lenient=bool(values.get("lenient", False)),
        thresholds=thresholds,
        timeout_s=float(values.get("timeout_s", defaults.timeout_s)),
    )
