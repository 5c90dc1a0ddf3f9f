"""Trial CSV emission and the run manifest.

Floats are printed with 17 significant digits so that parsing a written
file reproduces every value bit-exactly. Row order follows the canonical
trial order of the sweep, making CSV bytes reproducible.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Mapping

from . import __version__
from .experiment import SweepSummary, TrialRecord
from .generators import ScaleFreeParams

__all__ = ["CSV_HEADER", "write_trials_csv", "read_trials_csv",
           "RunManifest", "write_manifest", "read_manifest"]

CSV_HEADER = ["model", "n", "k", "p", "alpha", "beta", "gamma", "centrality",
              "p_b", "seed", "n_kept", "eps_raw", "epsN_raw", "eps_norm",
              "epsN_norm"]


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_trials_csv(records: Iterable[TrialRecord], path: str | Path) -> None:
    """One row per trial under the fixed header; empty cells for model
    fields that do not apply to the record's family."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in records:
            m = r.model
            if isinstance(m, ScaleFreeParams):
                model_cols = [m.family, str(m.n), "", "",
                              _fmt(m.alpha), _fmt(m.beta), _fmt(m.gamma)]
            elif m is not None:
                model_cols = [m.family, str(m.n), str(m.k), _fmt(m.p), "", "", ""]
            else:
                model_cols = ["", "", "", "", "", "", ""]
            writer.writerow(model_cols + [
                r.centrality.value,
                _fmt(r.p_b),
                str(r.seed),
                str(r.n_kept),
                _fmt(r.errors.epsilon_raw),
                _fmt(r.errors.epsilon_n_raw),
                _fmt(r.errors.epsilon_norm),
                _fmt(r.errors.epsilon_n_norm),
            ])


def read_trials_csv(path: str | Path) -> list[dict[str, Any]]:
    """Rows as dicts with numeric fields parsed back to float/int."""
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CSV_HEADER:
            raise ValueError(f"unexpected CSV header in {path}: {reader.fieldnames}")
        for raw in reader:
            row: dict[str, Any] = dict(raw)
            for key in ("n", "k", "seed", "n_kept"):
                row[key] = int(raw[key]) if raw[key] else None
            for key in ("p", "alpha", "beta", "gamma", "p_b",
                        "eps_raw", "epsN_raw", "eps_norm", "epsN_norm"):
                row[key] = float(raw[key]) if raw[key] else None
            rows.append(row)
    return rows


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to reproduce a run bit-exactly with the same
    artifact version (timestamps and counts are informational)."""

    config: Mapping[str, Any]
    base_seed: int
    en_rule: str
    artifact_version: str
    workers: int
    started_at: str
    finished_at: str
    cells: tuple[Mapping[str, Any], ...]


def manifest_from_summary(config_mapping: Mapping[str, Any], workers: int,
                          started_at: str, finished_at: str,
                          summary: SweepSummary) -> RunManifest:
    cells = []
    for cell in summary.cells:
        m = cell.model
        cells.append({
            "family": m.family,
            "n": m.n,
            "k": getattr(m, "k", None),
            "centrality": cell.centrality.value,
            "trials": cell.trials,
            "skips": cell.skips,
            "mean_eps_norm": cell.mean_eps_norm,
            "mean_epsN_norm": cell.mean_eps_n_norm,
            "std_eps_norm": cell.std_eps_norm,
            "std_epsN_norm": cell.std_eps_n_norm,
        })
    return RunManifest(
        config=dict(config_mapping),
        base_seed=int(config_mapping["base_seed"]),
        en_rule=str(config_mapping["en_rule"]),
        artifact_version=__version__,
        workers=workers,
        started_at=started_at,
        finished_at=finished_at,
        cells=tuple(cells),
    )


def write_manifest(manifest: RunManifest, path: str | Path) -> None:
    payload = {
        "artifact_version": manifest.artifact_version,
        "base_seed": manifest.base_seed,
        "en_rule": manifest.en_rule,
        "workers": manifest.workers,
        "started_at": manifest.started_at,
        "finished_at": manifest.finished_at,
        "config": dict(manifest.config),
        "cells": [dict(c) for c in manifest.cells],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_manifest(path: str | Path) -> RunManifest:
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    return RunManifest(
        config=payload["config"],
        base_seed=payload["base_seed"],
        en_rule=payload["en_rule"],
        artifact_version=payload["artifact_version"],
        workers=payload["workers"],
        started_at=payload["started_at"],
        finished_at=payload["finished_at"],
        cells=tuple(payload["cells"]),
    )
