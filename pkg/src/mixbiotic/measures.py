"""Communication-pattern measures over information-vector time series.

Per transition q(t) -> q(t+1) of an n-dimensional state with unit u:

  info_change  I = |sum(q_next) - sum(q_prev)| / (n * u)
  euclid       L = ||q_next - q_prev|| / (sqrt(n) * u)
  rel_change   L_R = ||q_next - q_prev|| / ||q_next||
  cos_sim      S = <q_next, q_prev> / (||q_next|| * ||q_prev||)

Zero-vector conventions: S = 0 if either vector is zero; L_R = 0 if
q_next is zero. Dead series therefore score near zero instead of
registering perfect similarity.

A series aggregates per-transition values into means and unbiased
variances (variance 0 when only one transition exists), plus the three
composite phase measures:

  m_atom = var_LR    (sporadic, isolated communication)
  m_mix  = mu_S * var_S   (balance of similarity and dissimilarity)
  m_mob  = mu_L      (large pattern displacement)

Polar trajectory coordinates per state: r = ||q||, theta = angle between
q and the all-ones vector; the zero vector maps to (0, 0).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np


@dataclass(frozen=True)
class DeltaMeasures:
    info_change: float
    euclid: float
    rel_change: float
    cos_sim: float


class PolarPoint(NamedTuple):
    r: float
    theta: float


@dataclass(frozen=True)
class MeasureSet:
    mu_I: float
    var_I: float
    mu_L: float
    var_L: float
    mu_LR: float
    var_LR: float
    mu_S: float
    var_S: float
    m_atom: float
    m_mix: float
    m_mob: float
    delta_count: int

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, doc: dict) -> "MeasureSet":
        return cls(**{f.name: doc[f.name] for f in fields(cls)})

    @classmethod
    def from_moments(
        cls,
        mu_I: float, var_I: float,
        mu_L: float, var_L: float,
        mu_LR: float, var_LR: float,
        mu_S: float, var_S: float,
        delta_count: int,
    ) -> "MeasureSet":
        """Build from series moments; composites derived exactly."""
        return cls(
            mu_I=mu_I, var_I=var_I, mu_L=mu_L, var_L=var_L,
            mu_LR=mu_LR, var_LR=var_LR, mu_S=mu_S, var_S=var_S,
            m_atom=var_LR, m_mix=mu_S * var_S, m_mob=mu_L,
            delta_count=delta_count,
        )


def save_measures(ms: MeasureSet, path) -> None:
    with open(path, "w") as fh:
        json.dump(ms.to_dict(), fh)
        fh.write("\n")


def load_measures(path) -> MeasureSet:
    with open(path) as fh:
        return MeasureSet.from_dict(json.load(fh))


def average_measures(sets: Sequence[MeasureSet]) -> MeasureSet:
    """Component-wise mean over trials, accumulated in the given order.

    Composites are averaged like every other field (the mean of per-trial
    products, not the product of means), so the m_mix = mu_S * var_S
    identity holds per series but not for averages.
    """
    if not sets:
        raise ValueError("cannot average an empty collection of measure sets")
    acc = {f.name: 0.0 for f in fields(MeasureSet)}
    for ms in sets:
        for name in acc:
            acc[name] += getattr(ms, name)
    k = len(sets)
    out = {name: acc[name] / k for name in acc}
    out["delta_count"] = int(round(out["delta_count"]))
    return MeasureSet(**out)


def delta_measures(q_prev: np.ndarray, q_next: np.ndarray, n: int, u: float) -> DeltaMeasures:
    """Per-transition measures between two information vectors."""
    q_prev = np.asarray(q_prev, dtype=np.float64)
    q_next = np.asarray(q_next, dtype=np.float64)
    if len(q_prev) != n or len(q_next) != n:
        raise ValueError(f"vectors must have dimension {n}")
    if u <= 0:
        raise ValueError(f"information unit must be positive, got {u}")
    diff = q_next - q_prev
    dist = float(np.linalg.norm(diff))
    sq_next = float(np.dot(q_next, q_next))
    sq_prev = float(np.dot(q_prev, q_prev))
    info = abs(float(q_next.sum()) - float(q_prev.sum())) / (n * u)
    euclid = dist / (math.sqrt(n) * u)
    rel = dist / math.sqrt(sq_next) if sq_next > 0 else 0.0
    if sq_next > 0 and sq_prev > 0:
        # sqrt of the product keeps cos exactly 1 for identical unit-count vectors
        cos = float(np.dot(q_next, q_prev)) / math.sqrt(sq_next * sq_prev)
        cos = min(max(cos, 0.0), 1.0)  # clamp fp noise; entries are non-negative
    else:
        cos = 0.0
    return DeltaMeasures(info, euclid, rel, cos)


def delta_measures_sparse(prev: dict, next_: dict, n: int, u: float) -> DeltaMeasures:
    """delta_measures over sparse {index: value} snapshots.

    Matches the dense result up to float summation order; built for
    dataset traces where n is large and snapshots touch few vertices.
    """
    if u <= 0:
        raise ValueError(f"information unit must be positive, got {u}")
    sum_prev = sum(prev.values())
    sum_next = sum(next_.values())
    sq_prev = sum(v * v for v in prev.values())
    sq_next = sum(v * v for v in next_.values())
    dot = sum(v * next_[i] for i, v in prev.items() if i in next_)
    dist_sq = sum((next_.get(i, 0.0) - v) ** 2 for i, v in prev.items())
    dist_sq += sum(v * v for i, v in next_.items() if i not in prev)
    dist = math.sqrt(dist_sq)
    info = abs(sum_next - sum_prev) / (n * u)
    euclid = dist / (math.sqrt(n) * u)
    rel = dist / math.sqrt(sq_next) if sq_next > 0 else 0.0
    if sq_next > 0 and sq_prev > 0:
        cos = min(max(dot / math.sqrt(sq_next * sq_prev), 0.0), 1.0)
    else:
        cos = 0.0
    return DeltaMeasures(info, euclid, rel, cos)


class _Welford:
    """Single-pass mean / unbiased-variance accumulator."""

    __slots__ = ("count", "mean", "m2")

    def __init__(self):
        self.count = 0
        self.mean = 0.0
        self.m2 = 0.0

    def add(self, x: float) -> None:
        self.count += 1
        delta = x - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (x - self.mean)

    @property
    def variance(self) -> float:
        return self.m2 / (self.count - 1) if self.count > 1 else 0.0


def aggregate_deltas(deltas: Iterable[DeltaMeasures]) -> MeasureSet:
    """Fold per-transition measures into a MeasureSet in one pass."""
    accs = [_Welford() for _ in range(4)]
    for dm in deltas:
        accs[0].add(dm.info_change)
        accs[1].add(dm.euclid)
        accs[2].add(dm.rel_change)
        accs[3].add(dm.cos_sim)
    if accs[0].count == 0:
        raise ValueError("series must contain at least one transition")
    a_i, a_l, a_lr, a_s = accs
    return MeasureSet.from_moments(
        a_i.mean, a_i.variance, a_l.mean, a_l.variance,
        a_lr.mean, a_lr.variance, a_s.mean, a_s.variance,
        delta_count=a_i.count,
    )


def iter_deltas(trace, n: int, u: float) -> Iterator[DeltaMeasures]:
    prev = None
    for state in trace:
        if prev is not None:
            yield delta_measures(prev, state, n, u)
        prev = state
    if prev is None:
        raise ValueError("trace is empty")


def series_measures(trace, n: int, u: float) -> MeasureSet:
    """Means, unbiased variances, and composites over a whole trace.

    ``trace`` is any ordered sequence of state vectors (a 2-D array works);
    it must contain at least two states. Variance over a single transition
    is 0 by convention.
    """
    trace = np.asarray(trace, dtype=np.float64)
    if trace.ndim != 2 or trace.shape[1] != n:
        raise ValueError(f"trace must be (steps, {n}); got {trace.shape}")
    if trace.shape[0] < 2:
        raise ValueError("trace must contain at least two states")
    if u <= 0:
        raise ValueError(f"information unit must be positive, got {u}")

    sums = trace.sum(axis=1)
    sqs = (trace * trace).sum(axis=1)
    diffs = trace[1:] - trace[:-1]
    dists = np.linalg.norm(diffs, axis=1)

    info = np.abs(sums[1:] - sums[:-1]) / (n * u)
    euclid = dists / (math.sqrt(n) * u)
    norms_next = np.sqrt(sqs[1:])
    rel = np.divide(dists, norms_next, out=np.zeros_like(dists), where=sqs[1:] > 0)
    dots = (trace[1:] * trace[:-1]).sum(axis=1)
    denom = np.sqrt(sqs[1:] * sqs[:-1])
    cos = np.divide(dots, denom, out=np.zeros_like(dots), where=denom > 0)
    np.clip(cos, 0.0, 1.0, out=cos)

    def stats(x):
        mu = float(np.mean(x))
        var = float(np.var(x, ddof=1)) if len(x) > 1 else 0.0
        return mu, var

    (mu_i, var_i), (mu_l, var_l) = stats(info), stats(euclid)
    (mu_lr, var_lr), (mu_s, var_s) = stats(rel), stats(cos)
    return MeasureSet.from_moments(
        mu_i, var_i, mu_l, var_l, mu_lr, var_lr, mu_s, var_s,
        delta_count=len(info),
    )


def polar_point(q: np.ndarray) -> PolarPoint:
    """Magnitude and declination from the all-ones direction for one state."""
    q = np.asarray(q, dtype=np.float64)
    sq = float(np.dot(q, q))
    if sq == 0.0:
        return PolarPoint(0.0, 0.0)
    # sqrt of the product keeps theta exactly 0 for uniform vectors
    c = float(q.sum()) / math.sqrt(sq * len(q))
    return PolarPoint(math.sqrt(sq), math.acos(min(max(c, -1.0), 1.0)))


def trajectory(trace) -> list[PolarPoint]:
    """Polar coordinates of every state in time order."""
    trace = np.asarray(trace, dtype=np.float64)
    if trace.ndim != 2 or trace.shape[0] == 0:
        raise ValueError("trace must be a nonempty sequence of vectors")
    return [polar_point(row) for row in trace]
