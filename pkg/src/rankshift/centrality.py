"""Exact degree and betweenness centrality plus deterministic ranking.

Betweenness uses single-source BFS with dependency back-propagation, exact
for unweighted graphs. Each score is the sum over unordered node pairs of
the fraction of shortest paths through the node, scaled by 2/((n-1)(n-2));
pairs in different components contribute nothing while n stays the global
node count of the measured graph.

The hot loop is compiled with numba when available; the pure-Python version
uses the same accumulation order, so both produce bit-identical floats.
"""
from __future__ import annotations

import enum
from collections import deque

import numpy as np

from .graph import Graph

__all__ = [
    "CentralityKind",
    "degree_centrality",
    "betweenness_centrality",
    "compute_centrality",
    "rank",
]

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dep, guard for safety
    HAVE_NUMBA = False


class CentralityKind(enum.Enum):
    DEGREE = "degree"
    BETWEENNESS = "betweenness"


def degree_centrality(g: Graph) -> list[float]:
    """deg(v) / (n - 1) per node; values in [0, 1]."""
    n = g.node_count
    if n < 2:
        raise ValueError(f"degree centrality needs >= 2 nodes, got {n}")
    scale = 1.0 / (n - 1)
    return [int(d) * scale for d in g.degrees()]


def _accumulate_python(n: int, offsets: np.ndarray, neighbors: np.ndarray) -> list[float]:
    bc = [0.0] * n
    offs = offsets.tolist()
    nbr = neighbors.tolist()
    for s in range(n):
        stack: list[int] = []
        pred: list[list[int]] = [[] for _ in range(n)]
        sigma = [0.0] * n
        dist = [-1] * n
        sigma[s] = 1.0
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            dv1 = dist[v] + 1
            sv = sigma[v]
            for i in range(offs[v], offs[v + 1]):
                w = nbr[i]
                if dist[w] < 0:
                    dist[w] = dv1
                    queue.append(w)
                if dist[w] == dv1:
                    sigma[w] += sv
                    pred[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in pred[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return bc


if HAVE_NUMBA:

    @njit(cache=True)
    def _accumulate_numba(n, offsets, neighbors):  # pragma: no cover - compiled
        bc = np.zeros(n, dtype=np.float64)
        dist = np.empty(n, dtype=np.int64)
        sigma = np.empty(n, dtype=np.float64)
        delta = np.empty(n, dtype=np.float64)
        order = np.empty(n, dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        # per source, predecessors of w are a subset of its neighbors, so a
        # CSR-shaped scratch with the same offsets always has room
        pred = np.empty(offsets[n], dtype=np.int64)
        pred_count = np.empty(n, dtype=np.int64)
        for s in range(n):
            for i in range(n):
                dist[i] = -1
                sigma[i] = 0.0
                delta[i] = 0.0
                pred_count[i] = 0
            dist[s] = 0
            sigma[s] = 1.0
            queue[0] = s
            head = 0
            tail = 1
            visited = 0
            while head < tail:
                v = queue[head]
                head += 1
                order[visited] = v
                visited += 1
                dv1 = dist[v] + 1
                sv = sigma[v]
                for i in range(offsets[v], offsets[v + 1]):
                    w = neighbors[i]
                    if dist[w] < 0:
                        dist[w] = dv1
                        queue[tail] = w
                        tail += 1
                    if dist[w] == dv1:
                        sigma[w] += sv
                        pred[offsets[w] + pred_count[w]] = v
                        pred_count[w] += 1
            for i in range(visited - 1, -1, -1):
                w = order[i]
                coeff = (1.0 + delta[w]) / sigma[w]
                for j in range(offsets[w], offsets[w] + pred_count[w]):
                    delta[pred[j]] += sigma[pred[j]] * coeff
                if w != s:
                    bc[w] += delta[w]
        return bc


def betweenness_centrality(g: Graph, use_numba: bool | None = None) -> list[float]:
    """Normalized betweenness per node.

    Sources are processed in ascending order and contributions summed in a
    fixed order, so the result is reproducible bit for bit.
    """
    n = g.node_count
    if n < 3:
        raise ValueError(f"betweenness centrality needs >= 3 nodes, got {n}")
    offsets, neighbors = g.csr()
    if use_numba is None:
        use_numba = HAVE_NUMBA
    if use_numba:
        raw = _accumulate_numba(n, offsets, neighbors).tolist()
    else:
        raw = _accumulate_python(n, offsets, neighbors)
    # the accumulation visits each unordered pair from both endpoints, so the
    # per-pair factor 2/((n-1)(n-2)) reduces to 1/((n-1)(n-2)) on the raw sum
    scale = 1.0 / ((n - 1) * (n - 2))
    return [b * scale for b in raw]


def compute_centrality(g: Graph, kind: CentralityKind) -> list[float]:
    if kind is CentralityKind.DEGREE:
        return degree_centrality(g)
    if kind is CentralityKind.BETWEENNESS:
        return betweenness_centrality(g)
    raise ValueError(f"unknown centrality kind: {kind!r}")


def rank(scores: list[float]) -> list[int]:
    """Node IDs sorted by score descending, ties broken by ascending ID.

    The positional error measures are sensitive to tie order, so the rule is
    fixed: two rankings computed anywhere in this package order equal scores
    the same way.
    """
    return sorted(range(len(scores)), key=lambda v: (-scores[v], v))
