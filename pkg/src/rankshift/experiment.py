"""Layer-perturbation protocol and sweep orchestration.

A trial marks each node of a generated graph as "blue" independently with
probability p_b, computes one centrality ranking on the induced subgraph of
the surviving nodes and one on the full graph restricted to those same
nodes, and scores the disagreement between the two rankings.

Sweeps are deterministic by construction: every trial derives its RNG
streams solely from (base_seed, cell_index, trial_index) via SeedSequence
spawn keys, so scheduling order and worker count cannot change any result.
"""
from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import mean, pstdev
from typing import Callable, Union

import numpy as np

from .centrality import CentralityKind, compute_centrality, rank
from .errors import ConfigError, TrialSkipped
from .generators import (ScaleFreeParams, SmallWorldParams,
                         generate_scale_free, generate_small_world)
from .graph import Graph, induced_subgraph
from .metrics import EN_RULES, ErrorPair, error_pair

__all__ = [
    "ModelParams",
    "LayerAssignment",
    "TrialRecord",
    "SweepConfig",
    "CellSummary",
    "SweepSummary",
    "sample_layer",
    "run_trial",
    "run_sweep",
]

ModelParams = Union[ScaleFreeParams, SmallWorldParams]

# reserved spawn-key namespaces; ordinary cells use (_CELL_SPACE, cell, trial)
_CELL_SPACE = 0
_FIXED_GRAPH_SPACE = 1
_SMOKE_SPACE = 2


@dataclass(frozen=True)
class LayerAssignment:
    """The sampled blue-node set of one trial graph."""

    blue: frozenset[int]
    p_b: float
    seed: int


@dataclass(frozen=True)
class TrialRecord:
    """One (model, centrality, p_b, seed) observation."""

    model: ModelParams
    centrality: CentralityKind
    p_b: float
    seed: int
    n_kept: int
    errors: ErrorPair


def sample_layer(g: Graph, p_b: float, seed: int) -> LayerAssignment:
    """Mark each node blue independently with probability p_b (PCG64 stream)."""
    if not (0.0 <= p_b <= 1.0):
        raise ValueError(f"p_b must be in [0, 1], got {p_b}")
    rng = np.random.default_rng(seed)
    mask = rng.random(g.node_count) < p_b
    blue = frozenset(int(v) for v in np.flatnonzero(mask))
    return LayerAssignment(blue=blue, p_b=p_b, seed=seed)


def run_trial(g: Graph, layer: LayerAssignment, kind: CentralityKind,
              en_rule: str = "example",
              model: ModelParams | None = None) -> TrialRecord:
    """Score ranking disagreement between the blue-free subgraph and the
    full graph restricted to the surviving nodes.

    Raises TrialSkipped when too few nodes survive to define the measure
    (fewer than 2 for degree, 3 for betweenness).
    """
    if layer.blue and max(layer.blue) >= g.node_count:
        raise ValueError("layer references nodes outside the graph")
    kept = [v for v in g.nodes() if v not in layer.blue]
    needed = 2 if kind is CentralityKind.DEGREE else 3
    if len(kept) < needed:
        raise TrialSkipped(
            f"{len(kept)} nodes survive, {kind.value} needs >= {needed}")
    sub, id_map = induced_subgraph(g, kept)
    baseline = rank(compute_centrality(sub, kind))
    full_order = rank(compute_centrality(g, kind))
    # restrict the full ranking to survivors, preserving order, and renumber
    # through the (monotone) id map so both rankings share one element set
    perturbed = [id_map.to_new[v] for v in full_order if v in id_map.to_new]
    errors = error_pair(baseline, perturbed, rule=en_rule)
    return TrialRecord(model=model, centrality=kind, p_b=layer.p_b,
                       seed=layer.seed, n_kept=len(kept), errors=errors)


@dataclass(frozen=True)
class SweepConfig:
    """Everything a sweep needs; identical configs give identical outputs."""

    models: tuple[ModelParams, ...]
    kinds: tuple[CentralityKind, ...]
    grid_start: float = 0.01
    grid_stop: float = 0.30
    grid_step: float = 0.01
    trials_per_point: int = 30
    base_seed: int = 0
    fixed_graph: bool = False
    en_rule: str = "example"
    out_dir: str = "out"

    def validate(self) -> None:
        if not self.models:
            raise ConfigError("at least one model is required")
        for m in self.models:
            m.validate()
        if not self.kinds:
            raise ConfigError("at least one centrality kind is required")
        if not (0.0 <= self.grid_start <= self.grid_stop <= 1.0):
            raise ConfigError(
                f"grid must satisfy 0 <= start <= stop <= 1, got "
                f"start={self.grid_start}, stop={self.grid_stop}")
        if self.grid_step <= 0:
            raise ConfigError(f"grid step must be > 0, got {self.grid_step}")
        if self.trials_per_point < 1:
            raise ConfigError(
                f"trials_per_point must be >= 1, got {self.trials_per_point}")
        if self.en_rule not in EN_RULES:
            raise ConfigError(f"en_rule must be one of {EN_RULES}")

    def grid_values(self) -> list[float]:
        values = []
        i = 0
        while True:
            v = round(self.grid_start + i * self.grid_step, 10)
            if v > self.grid_stop + 1e-9:
                break
            values.append(v)
            i += 1
        return values


@dataclass(frozen=True)
class CellSummary:
    """Aggregate over all grid points of one (model, centrality) cell."""

    model: ModelParams
    centrality: CentralityKind
    trials: int
    skips: int
    mean_eps_norm: float
    mean_eps_n_norm: float
    std_eps_norm: float
    std_eps_n_norm: float


@dataclass(frozen=True)
class SweepSummary:
    cells: tuple[CellSummary, ...]


@dataclass(frozen=True)
class _TrialSpec:
    """Self-contained, picklable work unit for one trial."""

    model: ModelParams
    kind: CentralityKind
    p_b: float
    trial_seed: int
    graph_seed: int
    en_rule: str


def _derive_seed(base_seed: int, spawn_key: tuple[int, ...]) -> int:
    ss = np.random.SeedSequence(base_seed, spawn_key=spawn_key)
    return int(ss.generate_state(1, np.uint64)[0])


def _split_trial_seed(trial_seed: int) -> tuple[int, int]:
    graph_ss, layer_ss = np.random.SeedSequence(trial_seed).spawn(2)
    return (int(graph_ss.generate_state(1, np.uint64)[0]),
            int(layer_ss.generate_state(1, np.uint64)[0]))


def _generate(model: ModelParams, seed: int) -> Graph:
    params = dataclasses.replace(model, seed=seed)
    if isinstance(params, ScaleFreeParams):
        return generate_scale_free(params)
    return generate_small_world(params)


def _execute_spec(spec: _TrialSpec) -> TrialRecord | TrialSkipped:
    graph_seed, layer_seed = _split_trial_seed(spec.trial_seed)
    if spec.graph_seed >= 0:  # fixed-graph mode: shared per-model graph
        graph_seed = spec.graph_seed
    g = _generate(spec.model, graph_seed)
    layer = sample_layer(g, spec.p_b, layer_seed)
    layer = dataclasses.replace(layer, seed=spec.trial_seed)
    try:
        return run_trial(g, layer, spec.kind, en_rule=spec.en_rule,
                         model=spec.model)
    except TrialSkipped as skip:
        return skip


def _build_specs(config: SweepConfig) -> list[_TrialSpec]:
    grid = config.grid_values()
    specs = []
    cell_index = 0
    for mi, model in enumerate(config.models):
        fixed_seed = (_derive_seed(config.base_seed, (_FIXED_GRAPH_SPACE, mi))
                      if config.fixed_graph else -1)
        for kind in config.kinds:
            for p_b in grid:
                for t in range(config.trials_per_point):
                    trial_seed = _derive_seed(
                        config.base_seed, (_CELL_SPACE, cell_index, t))
                    specs.append(_TrialSpec(
                        model=model, kind=kind, p_b=p_b,
                        trial_seed=trial_seed, graph_seed=fixed_seed,
                        en_rule=config.en_rule))
                cell_index += 1
    return specs


def _zero_layer_smoke_check(config: SweepConfig) -> None:
    """Every sweep first verifies that an empty layer yields exactly zero
    error for each (model, kind) cell."""
    for mi, model in enumerate(config.models):
        for ki, kind in enumerate(config.kinds):
            seed = _derive_seed(config.base_seed, (_SMOKE_SPACE, mi, ki))
            g = _generate(model, seed)
            layer = sample_layer(g, 0.0, seed)
            record = run_trial(g, layer, kind, en_rule=config.en_rule, model=model)
            pair = record.errors
            if (pair.epsilon_raw, pair.epsilon_n_raw) != (0.0, 0.0):
                raise RuntimeError(
                    f"identity check failed for {model.family}/{kind.value}: "
                    f"empty layer produced nonzero error {pair}")


def run_sweep(config: SweepConfig, workers: int = 1,
              progress: Callable[[str], None] | None = None,
              ) -> tuple[list[TrialRecord], SweepSummary]:
    """Run every cell of the sweep; returns records in canonical order
    (model, kind, grid point, trial) plus per-cell aggregates.

    Skipped trials are excluded from the records and counted in the summary.
    """
    config.validate()
    _zero_layer_smoke_check(config)
    specs = _build_specs(config)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(specs) // (workers * 8))
            outcomes = list(pool.map(_execute_spec, specs, chunksize=chunk))
    else:
        outcomes = []
        done = 0
        for spec in specs:
            outcomes.append(_execute_spec(spec))
            done += 1
            if progress is not None and done % 500 == 0:
                progress(f"{done}/{len(specs)} trials")
    records = []
    skip_counts: dict[tuple[int, CentralityKind], int] = {}
    model_index = {id(m): i for i, m in enumerate(config.models)}
    for spec, outcome in zip(specs, outcomes):
        key = (model_index[id(spec.model)], spec.kind)
        if isinstance(outcome, TrialSkipped):
            skip_counts[key] = skip_counts.get(key, 0) + 1
        else:
            records.append(outcome)
    cells = []
    for mi, model in enumerate(config.models):
        for kind in config.kinds:
            cell_records = [r for r in records
                            if r.model == model and r.centrality == kind]
            eps = [r.errors.epsilon_norm for r in cell_records]
            eps_n = [r.errors.epsilon_n_norm for r in cell_records]
            cells.append(CellSummary(
                model=model, centrality=kind,
                trials=len(cell_records),
                skips=skip_counts.get((mi, kind), 0),
                mean_eps_norm=mean(eps) if eps else float("nan"),
                mean_eps_n_norm=mean(eps_n) if eps_n else float("nan"),
                std_eps_norm=pstdev(eps) if eps else float("nan"),
                std_eps_n_norm=pstdev(eps_n) if eps_n else float("nan"),
            ))
    return records, SweepSummary(cells=tuple(cells))
