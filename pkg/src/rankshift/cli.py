"""Batch front door.

    rankshift run CONFIG [--seed N] [--workers N] [--out-dir DIR] [--en-rule R]
    rankshift gen {scale-free,small-world} ... [--out FILE]
    rankshift hist {scale-free,small-world} ... --out FILE.svg
    rankshift metrics BASELINE PERTURBED [--en-rule R]

Exit codes: 0 success, 1 configuration error, 2 runtime error. Errors are
printed to stderr as single 'error: <category>: <message>' lines.
"""
from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

from .config import config_to_mapping, parse_config
from .errors import ConfigError
from .experiment import run_sweep
from .generators import (ScaleFreeParams, SmallWorldParams, generate_scale_free,
                         generate_small_world)
from .graph import write_edge_list
from .metrics import EN_RULES, error_pair
from .output import manifest_from_summary, write_manifest, write_trials_csv
from .plots import render_degree_histogram, render_scatter

__all__ = ["main"]


def _add_model_arguments(parser: argparse.ArgumentParser) -> None:
    sub = parser.add_subparsers(dest="family", required=True)
    sf = sub.add_parser("scale-free", help="preferential-attachment graph")
    sf.add_argument("--n", type=int, required=True, help="node count")
    sf.add_argument("--alpha", type=float, default=0.41)
    sf.add_argument("--beta", type=float, default=0.54)
    sf.add_argument("--gamma", type=float, default=0.05)
    sf.add_argument("--delta-in", type=float, default=0.2)
    sf.add_argument("--delta-out", type=float, default=0.0)
    sw = sub.add_parser("small-world", help="ring lattice plus shortcuts")
    sw.add_argument("--n", type=int, required=True, help="node count")
    sw.add_argument("--k", type=int, required=True, help="ring neighbors (even)")
    sw.add_argument("--p", type=float, default=0.1, help="shortcut probability")


def _model_from_args(args: argparse.Namespace, seed: int):
    if args.family == "scale-free":
        return ScaleFreeParams(n=args.n, alpha=args.alpha, beta=args.beta,
                               gamma=args.gamma, delta_in=args.delta_in,
                               delta_out=args.delta_out, seed=seed)
    return SmallWorldParams(n=args.n, k=args.k, p=args.p, seed=seed)


def _generate_from_args(args: argparse.Namespace, seed: int):
    params = _model_from_args(args, seed)
    if isinstance(params, ScaleFreeParams):
        return generate_scale_free(params), params
    return generate_small_world(params), params


def _cmd_run(args: argparse.Namespace) -> int:
    config = parse_config(args.config)
    if args.seed is not None:
        config = dataclasses.replace(config, base_seed=args.seed)
    if args.en_rule is not None:
        config = dataclasses.replace(config, en_rule=args.en_rule)
    if args.out_dir is not None:
        config = dataclasses.replace(config, out_dir=args.out_dir)
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    started = datetime.now(timezone.utc).isoformat()
    records, summary = run_sweep(
        config, workers=args.workers,
        progress=lambda msg: print(msg, file=sys.stderr))
    finished = datetime.now(timezone.utc).isoformat()

    write_trials_csv(records, out_dir / "trials.csv")
    for kind in config.kinds:
        render_scatter(records, kind, out_dir / f"scatter_{kind.value}.svg")
    manifest = manifest_from_summary(config_to_mapping(config), args.workers,
                                     started, finished, summary)
    write_manifest(manifest, out_dir / "manifest.json")

    print(f"wrote {len(records)} trials to {out_dir / 'trials.csv'}")
    print(f"{'model':<28}{'centrality':<13}{'mean eps/n':>11}{'mean epsN/n':>12}"
          f"{'trials':>8}{'skips':>7}")
    for cell in summary.cells:
        m = cell.model
        label = (f"{m.family} n={m.n}" if isinstance(m, ScaleFreeParams)
                 else f"{m.family} n={m.n} k={m.k} p={m.p:g}")
        print(f"{label:<28}{cell.centrality.value:<13}"
              f"{cell.mean_eps_norm:>11.4f}{cell.mean_eps_n_norm:>12.4f}"
              f"{cell.trials:>8}{cell.skips:>7}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    g, _ = _generate_from_args(args, args.seed)
    if args.out:
        write_edge_list(g, args.out)
        print(f"wrote {g.node_count} nodes / {g.edge_count} edges to {args.out}")
    else:
        sys.stdout.write(f"# nodes: {g.node_count}\n")
        for u, v in g.edges():
            sys.stdout.write(f"{u} {v}\n")
    return 0


def _cmd_hist(args: argparse.Namespace) -> int:
    graphs, labels = [], []
    for i in range(args.graphs):
        g, params = _generate_from_args(args, args.seed + i)
        graphs.append(g)
        labels.append(f"seed {params.seed}")
    render_degree_histogram(graphs, args.out, labels=labels,
                            title=f"degree frequency ({args.family}, n={args.n})")
    print(f"wrote {args.out}")
    return 0


def _read_ranking(path: str) -> list[int]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read ranking {path}: {exc}") from None
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ConfigError(
            f"{path}: rankings must be whitespace-separated integers") from None


def _cmd_metrics(args: argparse.Namespace) -> int:
    baseline = _read_ranking(args.baseline)
    perturbed = _read_ranking(args.perturbed)
    pair = error_pair(baseline, perturbed, rule=args.en_rule)
    print(f"eps_raw={pair.epsilon_raw:g} epsN_raw={pair.epsilon_n_raw:g} "
          f"eps_norm={pair.epsilon_norm:.6f} epsN_norm={pair.epsilon_n_norm:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankshift",
        description="Measure how sampling away a random node layer perturbs "
                    "centrality rankings on random graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a sweep config: CSV + plots + manifest")
    run_p.add_argument("config", help="YAML sweep configuration")
    run_p.add_argument("--seed", type=int, default=None,
                       help="override the config base seed")
    run_p.add_argument("--workers", type=int,
                       default=max(1, os.cpu_count() or 1),
                       help="worker processes (default: available parallelism)")
    run_p.add_argument("--out-dir", default=None, help="override output directory")
    run_p.add_argument("--en-rule", choices=EN_RULES, default=None,
                       help="neighbor-change rule variant for eps_N")
    run_p.set_defaults(func=_cmd_run)

    gen_p = sub.add_parser("gen", help="generate one graph as an edge list")
    gen_p.add_argument("--seed", type=int, default=0)
    gen_p.add_argument("--out", default=None, help="output file (default: stdout)")
    _add_model_arguments(gen_p)
    gen_p.set_defaults(func=_cmd_gen)

    hist_p = sub.add_parser("hist", help="degree histogram SVG for sample graphs")
    hist_p.add_argument("--seed", type=int, default=0, help="seed of the first graph")
    hist_p.add_argument("--graphs", type=int, default=3,
                        help="number of overlaid sample graphs")
    hist_p.add_argument("--out", required=True, help="output SVG path")
    _add_model_arguments(hist_p)
    hist_p.set_defaults(func=_cmd_hist)

    met_p = sub.add_parser("metrics", help="compare two ranking files")
    met_p.add_argument("baseline", help="file of whitespace-separated node IDs")
    met_p.add_argument("perturbed", help="file of whitespace-separated node IDs")
    met_p.add_argument("--en-rule", choices=EN_RULES, default="example")
    met_p.set_defaults(func=_cmd_metrics)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - single boundary for exit code 2
        print(f"error: runtime: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
