"""Seeded random-graph constructors: directed preferential attachment
(converted to a simple undirected graph) and the Newman-Watts-Strogatz
small-world model (ring lattice plus added shortcuts, no rewiring).

All generators are pure functions of their params: the same seed always
produces the same edge set, regardless of process or worker count. RNG is
numpy PCG64 seeded per call.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .graph import Graph

__all__ = [
    "ScaleFreeParams",
    "SmallWorldParams",
    "generate_scale_free",
    "generate_small_world",
    "degree_histogram",
]


@dataclass(frozen=True)
class ScaleFreeParams:
    """Growth-process parameters.

    alpha: probability of (new node) -> (existing, by in-degree + delta_in)
    beta:  probability of an edge between existing nodes, source by
           out-degree + delta_out, target by in-degree + delta_in
    gamma: probability of (existing, by out-degree + delta_out) -> (new node)

    The three must sum to 1. The process starts from a single node with a
    self-loop and grows until n nodes exist; directions, loops and parallel
    edges are then dropped.
    """

    n: int
    alpha: float = 0.41
    beta: float = 0.54
    gamma: float = 0.05
    delta_in: float = 0.2
    delta_out: float = 0.0
    seed: int = 0

    family = "scale_free"

    def validate(self) -> None:
        if self.n < 3:
            raise ConfigError(f"scale_free: n must be >= 3, got {self.n}")
        for name in ("alpha", "beta", "gamma"):
            if getattr(self, name) < 0:
                raise ConfigError(f"scale_free: {name} must be >= 0")
        total = self.alpha + self.beta + self.gamma
        if abs(total - 1.0) > 1e-9:
            raise ConfigError(
                f"scale_free: alpha + beta + gamma must equal 1 (got {total!r})")
        if self.beta >= 1.0:
            raise ConfigError("scale_free: beta must be < 1 or the graph never grows")
        if self.delta_in < 0 or self.delta_out < 0:
            raise ConfigError("scale_free: delta_in and delta_out must be >= 0")
        if self.delta_out == 0.0 and self.gamma > 0 and self.alpha == 0.0:
            # all nodes would be gamma-born with zero out-degree: no valid source
            raise ConfigError("scale_free: alpha = 0 with delta_out = 0 cannot grow")


@dataclass(frozen=True)
class SmallWorldParams:
    """Ring-lattice parameters: n nodes, k nearest neighbors (even), plus a
    shortcut added with probability p per lattice edge."""

    n: int
    k: int
    p: float = 0.1
    seed: int = 0

    family = "small_world"

    def validate(self) -> None:
        if self.k % 2 != 0:
            raise ConfigError(f"small_world: k must be even, got {self.k}")
        if not (2 <= self.k < self.n):
            raise ConfigError(
                f"small_world: need n > k >= 2, got n={self.n}, k={self.k}")
        if not (0.0 <= self.p <= 1.0):
            raise ConfigError(f"small_world: p must be in [0, 1], got {self.p}")


def generate_scale_free(params: ScaleFreeParams) -> Graph:
    """Run the directed preferential-attachment process, then simplify.

    Node choice proportional to degree + delta decomposes into a mixture of
    a uniform draw (weight delta * node_count) and a draw from the list of
    edge endpoints (weight = current edge count), which keeps every step O(1).
    """
    params.validate()
    rng = np.random.default_rng(params.seed)
    # seed graph: one node with a self-loop (dropped at conversion)
    in_targets = [0]
    out_sources = [0]
    node_count = 1
    edges: list[tuple[int, int]] = []

    def choose_by_in_degree() -> int:
        bias = params.delta_in * node_count
        if bias > 0 and rng.random() < bias / (bias + len(in_targets)):
            return int(rng.integers(node_count))
        return in_targets[int(rng.integers(len(in_targets)))]

    def choose_by_out_degree() -> int:
        bias = params.delta_out * node_count
        if bias > 0 and rng.random() < bias / (bias + len(out_sources)):
            return int(rng.integers(node_count))
        return out_sources[int(rng.integers(len(out_sources)))]

    while node_count < params.n:
        r = rng.random()
        if r < params.alpha:
            w = choose_by_in_degree()
            v = node_count
            node_count += 1
        elif r < params.alpha + params.beta:
            v = choose_by_out_degree()
            w = choose_by_in_degree()
        else:
            v = choose_by_out_degree()
            w = node_count
            node_count += 1
        edges.append((v, w))
        out_sources.append(v)
        in_targets.append(w)

    # Graph() drops directions, self-loops and parallel edges
    return Graph(params.n, edges)


def generate_small_world(params: SmallWorldParams) -> Graph:
    """Ring lattice of k nearest neighbors; per lattice edge, with probability
    p, add a shortcut between a uniformly random node pair. Colliding or
    self-loop shortcuts are discarded, never resampled."""
    params.validate()
    rng = np.random.default_rng(params.seed)
    n, k = params.n, params.k
    edges: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(1, k // 2 + 1):
            edges.append((i, (i + j) % n))
    lattice_edge_count = len(edges)
    for _ in range(lattice_edge_count):
        if rng.random() < params.p:
            u = int(rng.integers(n))
            w = int(rng.integers(n))
            edges.append((u, w))
    return Graph(n, edges)


def degree_histogram(g: Graph) -> dict[int, int]:
    """Exact node count per degree value; counts sum to the node count."""
    counts = np.bincount(g.degrees()) if g.node_count else np.zeros(0, dtype=np.int64)
    return {deg: int(c) for deg, c in enumerate(counts) if c > 0}
