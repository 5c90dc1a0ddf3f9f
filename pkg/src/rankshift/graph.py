"""Immutable undirected simple graph over dense integer node IDs.

Adjacency is stored in CSR form (offsets + flat neighbor array) with each
neighbor segment sorted ascending, so iteration order is deterministic and
identical seeds yield identical downstream results. Graphs are frozen after
construction and safe to share across workers.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "IdMap",
    "induced_subgraph",
    "connected_components",
    "read_edge_list",
    "write_edge_list",
]


class Graph:
    """Undirected simple graph on nodes 0..n-1.

    Self-loops and duplicate edges in the input are dropped at construction,
    so every instance satisfies: symmetric adjacency, no self-loops, no
    parallel edges, all neighbor IDs in range.
    """

    __slots__ = ("_n", "_offsets", "_neighbors")

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]] = ()):
        if node_count < 0:
            raise ValueError(f"node_count must be >= 0, got {node_count}")
        n = int(node_count)
        unique: set[tuple[int, int]] = set()
        for u, v in edges:
            u = int(u)
            v = int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} nodes")
            if u == v:
                continue
            unique.add((u, v) if u < v else (v, u))
        degrees = np.zeros(n, dtype=np.int64)
        for u, v in unique:
            degrees[u] += 1
            degrees[v] += 1
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=offsets[1:])
        neighbors = np.zeros(offsets[-1], dtype=np.int64)
        fill = offsets[:-1].copy()
        for u, v in sorted(unique):
            neighbors[fill[u]] = v
            fill[u] += 1
            neighbors[fill[v]] = u
            fill[v] += 1
        # a sorted edge list fills each forward segment in order, but the
        # reverse entries arrive interleaved, so sort every segment once
        for v in range(n):
            seg = neighbors[offsets[v]:offsets[v + 1]]
            seg.sort()
        offsets.setflags(write=False)
        neighbors.setflags(write=False)
        self._n = n
        self._offsets = offsets
        self._neighbors = neighbors

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return int(self._offsets[-1]) // 2

    def nodes(self) -> range:
        return range(self._n)

    def degree(self, v: int) -> int:
        self._check_node(v)
        return int(self._offsets[v + 1] - self._offsets[v])

    def neighbors(self, v: int) -> Sequence[int]:
        """Sorted neighbor IDs of v (read-only view)."""
        self._check_node(v)
        return self._neighbors[self._offsets[v]:self._offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        seg = self._neighbors[self._offsets[u]:self._offsets[u + 1]]
        i = int(np.searchsorted(seg, v))
        return i < len(seg) and seg[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        for u in range(self._n):
            for v in self._neighbors[self._offsets[u]:self._offsets[u + 1]]:
                if u < v:
                    yield (u, int(v))

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Raw (offsets, neighbors) arrays, read-only."""
        return self._offsets, self._neighbors

    def degrees(self) -> np.ndarray:
        return self._offsets[1:] - self._offsets[:-1]

    def _check_node(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise ValueError(f"node {v} out of range for {self._n} nodes")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._n == other._n
                and np.array_equal(self._offsets, other._offsets)
                and np.array_equal(self._neighbors, other._neighbors))

    def __hash__(self) -> int:
        return hash((self._n, self._neighbors.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(nodes={self._n}, edges={self.edge_count})"


@dataclass(frozen=True)
class IdMap:
    """Bidirectional node-ID map produced by induced_subgraph.

    to_new maps an original ID to its dense subgraph ID; to_old[i] is the
    original ID of subgraph node i. The renumbering is monotone: ascending
    original IDs get ascending new IDs.
    """

    to_new: dict[int, int]
    to_old: tuple[int, ...]


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, IdMap]:
    """Subgraph on `keep` with both-endpoint edges, densely renumbered."""
    kept = sorted(set(int(v) for v in keep))
    for v in kept:
        g._check_node(v)
    to_new = {old: new for new, old in enumerate(kept)}
    edges = []
    for old_u in kept:
        for old_v in g.neighbors(old_u):
            if old_u < old_v and old_v in to_new:
                edges.append((to_new[old_u], to_new[int(old_v)]))
    return Graph(len(kept), edges), IdMap(to_new=to_new, to_old=tuple(kept))


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest member."""
    n = g.node_count
    seen = bytearray(n)
    components = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = 1
        comp = [start]
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                w = int(w)
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    frontier.append(w)
        comp.sort()
        components.append(comp)
    return components


def write_edge_list(g: Graph, path: str | Path) -> None:
    """Dump as text: '# nodes: N' header plus one 'u v' line per edge."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# nodes: {g.node_count}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_edge_list(path: str | Path, node_count: int | None = None) -> Graph:
    """Parse the edge-list text format written by write_edge_list.

    Lines starting with '#' are comments; a '# nodes: N' comment fixes the
    node count (otherwise max ID + 1 is used, losing trailing isolated nodes).
    """
    edges = []
    max_id = -1
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("nodes:") and node_count is None:
                    node_count = int(body.split(":", 1)[1])
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'u v', got {line!r}")
            u, v = int(parts[0]), int(parts[1])
            edges.append((u, v))
            max_id = max(max_id, u, v)
    if node_count is None:
        node_count = max_id + 1
    return Graph(node_count, edges)
