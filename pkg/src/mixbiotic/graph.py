"""Undirected simple graphs and whole-graph statistics.

Graphs are immutable: a vertex count plus a deduplicated set of unordered
edges (i, j) with i < j. Adjacency is exposed both as neighbor sets (for
BFS and clustering) and as a cached dense boolean matrix (for vectorized
simulation steps).

Serialization format (JSON)::

    {"n": <int>, "edges": [[i, j], ...]}   # pairs stored with i < j
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_neighbors", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        canon = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop ({i},{i}) is not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            canon.add((i, j) if i < j else (j, i))
        self.n = int(n)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for i, j in self.edges:
            neighbors[i].add(j)
            neighbors[j].add(i)
        self._neighbors = neighbors
        self._adj = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> set[int]:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._neighbors[i]

    def adjacency_matrix(self) -> np.ndarray:
        """Dense symmetric boolean adjacency matrix (zero diagonal), cached."""
        if self._adj is None:
            a = np.zeros((self.n, self.n), dtype=np.uint8)
            for i, j in self.edges:
                a[i, j] = 1
                a[j, i] = 1
            self._adj = a
        return self._adj

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, doc: dict) -> "Graph":
        return cls(doc["n"], [tuple(e) for e in doc["edges"]])


def build_graph(vertex_count: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Build a simple graph, collapsing duplicate edges; order irrelevant.

    Rejects self-loops and out-of-range vertex indices with a ValueError.
    """
    return Graph(vertex_count, edges)


@dataclass(frozen=True)
class GraphStats:
    vertex_count: int
    edge_count: int
    diameter: float  # integer-valued, or math.inf when disconnected
    mean_distance: float  # math.inf when disconnected
    density: float
    mean_clustering: float

    def to_dict(self) -> dict:
        # infinity encoded as the string "inf" so the JSON stays strict
        enc = lambda x: "inf" if math.isinf(x) else x
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "diameter": enc(self.diameter),
            "mean_distance": enc(self.mean_distance),
            "density": self.density,
            "mean_clustering": self.mean_clustering,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "GraphStats":
        dec = lambda x: math.inf if x == "inf" else x
        return cls(
            vertex_count=doc["vertex_count"],
            edge_count=doc["edge_count"],
            diameter=dec(doc["diameter"]),
            mean_distance=dec(doc["mean_distance"]),
            density=doc["density"],
            mean_clustering=doc["mean_clustering"],
        )


def _bfs_distances(g: Graph, source: int) -> list[int]:
    """Unweighted shortest-path distances from source; -1 for unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in g._neighbors[v]:
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def local_clustering(g: Graph, v: int) -> float:
    """Fraction of neighbor pairs that are themselves connected.

    Vertices with degree < 2 contribute 0.
    """
    nbrs = g._neighbors[v]
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = 0
    for u in nbrs:
        # count each neighbor pair once via the smaller adjacency set
        u_nbrs = g._neighbors[u]
        if len(u_nbrs) < k:
            links += sum(1 for w in u_nbrs if w in nbrs)
        else:
            links += sum(1 for w in nbrs if w in u_nbrs)
    # every pair counted twice (once from each endpoint)
    return links / (k * (k - 1))


def mean_clustering(g: Graph) -> float:
    return sum(local_clustering(g, v) for v in range(g.n)) / g.n


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    dist = _bfs_distances(g, 0)
    return all(d >= 0 for d in dist)


def graph_stats(g: Graph) -> GraphStats:
    """Whole-graph statistics: diameter, mean distance, density, clustering.

    Diameter and mean distance are averaged/maximized over all unordered
    distinct pairs via one BFS per source, and are +inf if and only if the
    graph is disconnected. A single-vertex graph reports 0 for everything
    by convention.
    """
    n = g.n
    m = g.edge_count
    density = 2.0 * m / (n * (n - 1)) if n >= 2 else 0.0
    clustering = mean_clustering(g)
    if n == 1:
        return GraphStats(1, m, 0.0, 0.0, density, clustering)
    if not is_connected(g):
        return GraphStats(n, m, math.inf, math.inf, density, clustering)
    diameter = 0
    dist_total = 0
    for src in range(n):
        dist = _bfs_distances(g, src)
        # each unordered pair counted once: targets > src
        for tgt in range(src + 1, n):
            d = dist[tgt]
            if d > diameter:
                diameter = d
            dist_total += d
    pairs = n * (n - 1) // 2
    return GraphStats(n, m, float(diameter), dist_total / pairs, density, clustering)


def save_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        json.dump(g.to_dict(), fh)
        fh.write("\n")


def load_graph(path) -> Graph:
    with open(path) as fh:
        return Graph.from_dict(json.load(fh))
