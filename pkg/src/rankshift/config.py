"""Sweep configuration files (YAML) -> validated SweepConfig.

Schema (all keys except `models` optional, defaults in parentheses):

    base_seed: 42            # (0)
    trials_per_point: 30     # (30)
    grid: {start: 0.01, stop: 0.30, step: 0.01}   # (those values)
    centralities: [degree, betweenness]           # ([degree, betweenness])
    en_rule: example         # or literal (example)
    fixed_graph: false       # resample the graph per trial when false (false)
    out_dir: out             # (out)
    models:
      - family: scale_free
        n: 150
        alpha: 0.41          # (0.41)
        beta: 0.54           # (0.54)
        gamma: 0.05          # (0.05)
        delta_in: 0.2        # (0.2)
        delta_out: 0.0       # (0.0)
      - family: small_world
        n: 150
        k: 8
        p: 0.1               # (0.1)
"""
from __future__ import annotations

from pathlib import Path
from typing import Any, Mapping

import yaml

from .centrality import CentralityKind
from .errors import ConfigError
from .experiment import ModelParams, SweepConfig
from .generators import ScaleFreeParams, SmallWorldParams

__all__ = ["parse_config", "config_from_mapping", "config_to_mapping"]

_SCALE_FREE_KEYS = {"family", "n", "alpha", "beta", "gamma", "delta_in", "delta_out"}
_SMALL_WORLD_KEYS = {"family", "n", "k", "p"}
_TOP_KEYS = {"base_seed", "trials_per_point", "grid", "centralities", "en_rule",
             "fixed_graph", "out_dir", "models"}


def _require(mapping: Mapping[str, Any], key: str, context: str) -> Any:
    if key not in mapping:
        raise ConfigError(f"{context}: missing required key '{key}'")
    return mapping[key]


def _as_number(value: Any, key: str, context: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{context}.{key}: expected a number, got {value!r}")
    return float(value)


def _as_int(value: Any, key: str, context: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{context}.{key}: expected an integer, got {value!r}")
    return value


def _parse_model(entry: Any, context: str) -> ModelParams:
    if not isinstance(entry, Mapping):
        raise ConfigError(f"{context}: expected a mapping, got {type(entry).__name__}")
    family = _require(entry, "family", context)
    if family == "scale_free":
        allowed = _SCALE_FREE_KEYS
    elif family == "small_world":
        allowed = _SMALL_WORLD_KEYS
    else:
        raise ConfigError(
            f"{context}.family: must be 'scale_free' or 'small_world', got {family!r}")
    unknown = set(entry) - allowed
    if unknown:
        raise ConfigError(f"{context}: unknown keys {sorted(unknown)}")
    n = _as_int(_require(entry, "n", context), "n", context)
    if family == "scale_free":
        params: ModelParams = ScaleFreeParams(
            n=n,
            alpha=_as_number(entry.get("alpha", 0.41), "alpha", context),
            beta=_as_number(entry.get("beta", 0.54), "beta", context),
            gamma=_as_number(entry.get("gamma", 0.05), "gamma", context),
            delta_in=_as_number(entry.get("delta_in", 0.2), "delta_in", context),
            delta_out=_as_number(entry.get("delta_out", 0.0), "delta_out", context),
        )
    else:
        params = SmallWorldParams(
            n=n,
            k=_as_int(_require(entry, "k", context), "k", context),
            p=_as_number(entry.get("p", 0.1), "p", context),
        )
    try:
        params.validate()
    except ConfigError as exc:
        raise ConfigError(f"{context}: {exc}") from None
    return params


def config_from_mapping(data: Mapping[str, Any]) -> SweepConfig:
    if not isinstance(data, Mapping):
        raise ConfigError("config root must be a mapping")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown top-level keys {sorted(unknown)}")
    raw_models = _require(data, "models", "config")
    if not isinstance(raw_models, list) or not raw_models:
        raise ConfigError("models: expected a non-empty list")
    models = tuple(_parse_model(m, f"models[{i}]") for i, m in enumerate(raw_models))

    raw_kinds = data.get("centralities", ["degree", "betweenness"])
    if not isinstance(raw_kinds, list) or not raw_kinds:
        raise ConfigError("centralities: expected a non-empty list")
    kinds = []
    for i, name in enumerate(raw_kinds):
        try:
            kinds.append(CentralityKind(name))
        except ValueError:
            raise ConfigError(
                f"centralities[{i}]: must be 'degree' or 'betweenness', "
                f"got {name!r}") from None

    grid = data.get("grid", {})
    if not isinstance(grid, Mapping):
        raise ConfigError("grid: expected a mapping with start/stop/step")
    unknown = set(grid) - {"start", "stop", "step"}
    if unknown:
        raise ConfigError(f"grid: unknown keys {sorted(unknown)}")

    en_rule = data.get("en_rule", "example")
    fixed_graph = data.get("fixed_graph", False)
    if not isinstance(fixed_graph, bool):
        raise ConfigError(f"fixed_graph: expected a boolean, got {fixed_graph!r}")

    config = SweepConfig(
        models=models,
        kinds=tuple(kinds),
        grid_start=_as_number(grid.get("start", 0.01), "start", "grid"),
        grid_stop=_as_number(grid.get("stop", 0.30), "stop", "grid"),
        grid_step=_as_number(grid.get("step", 0.01), "step", "grid"),
        trials_per_point=_as_int(data.get("trials_per_point", 30),
                                 "trials_per_point", "config"),
        base_seed=_as_int(data.get("base_seed", 0), "base_seed", "config"),
        fixed_graph=fixed_graph,
        en_rule=en_rule,
        out_dir=str(data.get("out_dir", "out")),
    )
    config.validate()
    return config


def parse_config(path: str | Path) -> SweepConfig:
    """Load and validate a sweep config; raises ConfigError with the
    offending field on any problem."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: invalid YAML: {exc}") from None
    if data is None:
        raise ConfigError(
            f"{path}: empty config; required keys: models "
            "(plus optional base_seed, trials_per_point, grid, centralities, "
            "en_rule, fixed_graph, out_dir)")
    return config_from_mapping(data)


def config_to_mapping(config: SweepConfig) -> dict[str, Any]:
    """Fully resolved config as plain data; parsing it back reproduces the
    config exactly (used for the run manifest)."""
    models = []
    for m in config.models:
        if isinstance(m, ScaleFreeParams):
            models.append({"family": m.family, "n": m.n, "alpha": m.alpha,
                           "beta": m.beta, "gamma": m.gamma,
                           "delta_in": m.delta_in, "delta_out": m.delta_out})
        else:
            models.append({"family": m.family, "n": m.n, "k": m.k, "p": m.p})
    return {
        "base_seed": config.base_seed,
        "trials_per_point": config.trials_per_point,
        "grid": {"start": config.grid_start, "stop": config.grid_stop,
                 "step": config.grid_step},
        "centralities": [k.value for k in config.kinds],
        "en_rule": config.en_rule,
        "fixed_graph": config.fixed_graph,
        "out_dir": config.out_dir,
        "models": models,
    }
