"""Stochastic generation/disappearance of communication on a graph.

State is the per-vertex information vector q, held internally as integer
unit counts (q_i = count_i * u), which keeps quantization exact for any
unit size. One step:

  1. count informed vertices n_inf (support of q)
  2. pick Round[g * n_inf] senders uniformly from the informed set
  3. pick Round[g * n] receivers uniformly from all vertices
  4. every adjacent (sender, receiver) pair delivers one unit to the
     receiver, accumulating across senders; senders lose nothing
  5. pick Round[d * n'_inf] vertices uniformly from the post-delivery
     support and zero them out

Round is round-half-away-from-zero. RNG stream order is part of the
reproducibility contract: the seed-selection of the initial informed set,
then per step senders, receivers, erasures. Selections draw k swaps of a
partial Fisher-Yates shuffle (one ``integers()`` call each); empty
selections consume nothing.

Trace serialization: dense CSV with header ``t,q_0,...,q_{n-1}`` or a
sparse JSON document ``{"n": n, "u": u, "rows": [{"t": k,
"nz": [[i, q_i], ...]}, ...]}``. Loaders accept both.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph


def round_half_away(x: float) -> int:
    """Round to nearest integer, halves away from zero."""
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


def sample_without_replacement(rng: np.random.Generator, population: np.ndarray, k: int) -> np.ndarray:
    """Uniform k-subset of population via partial Fisher-Yates.

    Consumes exactly one ``integers(i, m)`` draw per selected element and
    nothing when k == 0.
    """
    m = len(population)
    if k < 0 or k > m:
        raise ValueError(f"cannot draw {k} from population of {m}")
    if k == 0:
        return np.empty(0, dtype=population.dtype)
    pool = population.copy()
    for i in range(k):
        j = int(rng.integers(i, m))
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:k]


@dataclass(frozen=True)
class SimConfig:
    g: float  # generation rate
    d: float  # disappearance rate
    u: float = 1.0  # information unit
    t_max: int = 100  # iteration count
    n_0: int = 10  # initially informed vertices
    seed: int = 0

    def validate(self, n: int | None = None) -> None:
        if not (0.0 <= self.g <= 1.0):
            raise ValueError(f"generation rate must be in [0,1], got {self.g}")
        if not (0.0 <= self.d <= 1.0):
            raise ValueError(f"disappearance rate must be in [0,1], got {self.d}")
        if self.u <= 0:
            raise ValueError(f"information unit must be positive, got {self.u}")
        if self.t_max < 0:
            raise ValueError(f"iteration count must be >= 0, got {self.t_max}")
        if self.n_0 < 0:
            raise ValueError(f"initial informed count must be >= 0, got {self.n_0}")
        if n is not None and self.n_0 > n:
            raise ValueError(f"cannot seed {self.n_0} informed vertices on {n}")


@dataclass(frozen=True)
class StepReport:
    n_informed_before: int
    n_senders: int
    n_receivers: int
    n_erased: int


@dataclass
class SimTrace:
    """Information-count history: row t holds the counts after step t."""

    counts: np.ndarray  # (t_max+1, n) int64
    u: float
    reports: list[StepReport] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.counts.shape[1]

    @property
    def states(self) -> np.ndarray:
        """Float information vectors q(t) = counts(t) * u, shape (t_max+1, n)."""
        return self.counts.astype(np.float64) * self.u

    def __len__(self) -> int:
        return self.counts.shape[0]


def init_state(cfg: SimConfig, n: int, rng: np.random.Generator) -> np.ndarray:
    """Initial count vector: n_0 vertices chosen uniformly get one unit."""
    cfg.validate(n)
    counts = np.zeros(n, dtype=np.int64)
    chosen = sample_without_replacement(rng, np.arange(n), cfg.n_0)
    counts[chosen] = 1
    return counts


def sim_step(
    counts: np.ndarray, graph: Graph, cfg: SimConfig, rng: np.random.Generator
) -> tuple[np.ndarray, StepReport]:
    """One generation/disappearance step; returns new counts and a report."""
    n = graph.n
    if len(counts) != n:
        raise ValueError(f"state dimension {len(counts)} != vertex count {n}")
    counts = counts.copy()
    informed = np.flatnonzero(counts)
    n_inf = len(informed)

    n_s = round_half_away(cfg.g * n_inf)
    senders = sample_without_replacement(rng, informed, n_s)
    n_r = round_half_away(cfg.g * n)
    receivers = sample_without_replacement(rng, np.arange(n), n_r)

    if n_s and n_r:
        adj = graph.adjacency_matrix()
        # one unit per adjacent (sender, receiver) pair, accumulated
        delivered = adj[np.ix_(senders, receivers)].sum(axis=0, dtype=np.int64)
        counts[receivers] += delivered

    support = np.flatnonzero(counts)
    n_d = round_half_away(cfg.d * len(support))
    erased = sample_without_replacement(rng, support, n_d)
    counts[erased] = 0
    return counts, StepReport(n_inf, n_s, n_r, n_d)


def run_sim(cfg: SimConfig, graph: Graph) -> SimTrace:
    """Full run: seed the state, then t_max steps. Pure in (cfg, graph)."""
    cfg.validate(graph.n)
    rng = np.random.default_rng(int(cfg.seed) & 0xFFFFFFFFFFFFFFFF)
    counts = init_state(cfg, graph.n, rng)
    history = np.empty((cfg.t_max + 1, graph.n), dtype=np.int64)
    history[0] = counts
    reports = []
    for t in range(1, cfg.t_max + 1):
        counts, report = sim_step(counts, graph, cfg, rng)
        history[t] = counts
        reports.append(report)
    return SimTrace(history, cfg.u, reports)


def _fmt(x: float) -> str:
    return repr(float(x))


def save_trace_csv(trace: SimTrace, path) -> None:
    states = trace.states
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t"] + [f"q_{i}" for i in range(trace.n)])
        for t, row in enumerate(states):
            writer.writerow([t] + [_fmt(v) for v in row])


def save_trace_sparse_json(trace: SimTrace, path) -> None:
    states = trace.states
    rows = []
    for t, row in enumerate(states):
        nz = [[int(i), float(row[i])] for i in np.flatnonzero(row)]
        rows.append({"t": t, "nz": nz})
    with open(path, "w") as fh:
        json.dump({"n": trace.n, "u": trace.u, "rows": rows}, fh)
        fh.write("\n")


def load_trace(path) -> tuple[np.ndarray, float | None]:
    """Load a trace saved in either format.

    Returns (states, u); u is None for dense CSV, which does not carry it.
    """
    path = str(path)
    with open(path) as fh:
        head = fh.read(1)
    if head == "{":
        with open(path) as fh:
            doc = json.load(fh)
        n = doc["n"]
        states = np.zeros((len(doc["rows"]), n), dtype=np.float64)
        for k, row in enumerate(doc["rows"]):
            if row["t"] != k:
                raise ValueError(f"sparse trace rows out of order at index {k}")
            for i, q in row["nz"]:
                states[k, i] = q
        return states, float(doc["u"])
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if not header or header[0] != "t":
            raise ValueError("dense trace CSV must start with a 't' column")
        n = len(header) - 1
        data = []
        for row in reader:
            if len(row) != n + 1:
                raise ValueError(f"trace row length {len(row)} != {n + 1}")
            data.append([float(v) for v in row[1:]])
    return np.asarray(data, dtype=np.float64), None
