"""Classical graph samplers scaled up naively to a ccdh estimate.

These are comparison baselines. They read exact degrees of the vertices they
collect, and edge sampling additionally assumes direct edge access, which the
standard query model does not provide.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .graph import CCDH, Graph, ccdh_from_degrees

JUMP_PROBABILITY = 0.15
FF_MEAN_BURN = 2.5


class BaselineKind(enum.Enum):
    VS = "vs"
    ES = "es"
    RWJ = "rwj"
    OWS = "ows"
    FF = "ff"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown baseline {value!r}") from None

    @property
    def outside_sm(self) -> bool:
        return self is BaselineKind.ES


@dataclass(frozen=True)
class SampledDegreeSet:
    vertices: np.ndarray
    degrees: np.ndarray
    kind: BaselineKind
    budget: int

    @property
    def budget_used(self):
        return len(self.vertices)


class _Collector:
    def __init__(self, budget):
        self.budget = budget
        self.seen = set()
        self.order = []

    @property
    def full(self):
        return len(self.order) >= self.budget

    def add(self, v):
        v = int(v)
        if v not in self.seen and not self.full:
            self.seen.add(v)
            self.order.append(v)


def _vs(g, rng, c, params):
    for v in rng.choice(g.n, size=min(c.budget, g.n), replace=False):
        c.add(v)


def _es(g, rng, c, params):
    # a uniform slot of the symmetric neighbor array is a uniform edge with a
    # uniform endpoint
    while not c.full and len(c.order) < g.n:
        for v in g.neighbors[rng.integers(2 * g.m, size=max(64, 2 * (c.budget - len(c.order))))]:
            c.add(v)
            if c.full:
                break


def _rwj(g, rng, c, params):
    p_jump = params.get("jump_probability", JUMP_PROBABILITY)
    v = int(rng.integers(g.n))
    c.add(v)
    while not c.full and len(c.order) < g.n:
        if rng.random() < p_jump:
            v = int(rng.integers(g.n))
        else:
            nb = g.neighbors_of(v)
            v = int(nb[rng.integers(len(nb))])
        c.add(v)


def _ows(g, rng, c, params):
    while not c.full and len(c.order) < g.n:
        seed = int(rng.integers(g.n))
        c.add(seed)
        wave = g.neighbors_of(seed).copy()
        rng.shuffle(wave)
        for u in wave:
            if c.full:
                break
            c.add(u)


def _ff(g, rng, c, params):
    mean_burn = params.get("mean_burn", FF_MEAN_BURN)
    if mean_burn < 1:
        raise InvalidParameterError("mean_burn must be at least 1")
    p = 1.0 / mean_burn
    while not c.full and len(c.order) < g.n:
        ignition = int(rng.integers(g.n))
        if ignition in c.seen:
            continue
        c.add(ignition)
        queue = deque([ignition])
        while queue and not c.full:
            v = queue.popleft()
            unburned = [u for u in g.neighbors_of(v).tolist() if u not in c.seen]
            if not unburned:
                continue
            x = min(int(rng.geometric(p)), len(unburned))
            for u in rng.choice(unburned, size=x, replace=False).tolist():
                if c.full:
                    break
                c.add(u)
                queue.append(u)


_SAMPLERS = {
    BaselineKind.VS: _vs,
    BaselineKind.ES: _es,
    BaselineKind.RWJ: _rwj,
    BaselineKind.OWS: _ows,
    BaselineKind.FF: _ff,
}


def collect(graph: Graph, kind, budget: int, params=None, seed=None) -> SampledDegreeSet:
    """Collect up to `budget` distinct vertices with the given sampler.

    VS draws uniform vertices; ES keeps a uniform endpoint of uniform edges;
    RWJ walks from a uniform start, jumping to a uniform vertex with
    probability 0.15 per step; OWS adds uniform seeds and their full
    neighborhood (shuffled, truncated at the budget); FF burns a geometric
    number (mean 2.5) of unburned neighbors from each burning vertex and
    re-ignites at a uniform vertex when the fire dies out.
    """
    kind = BaselineKind.parse(kind)
    if budget < 1:
        raise InvalidParameterError(f"budget must be at least 1, got {budget}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    c = _Collector(int(budget))
    _SAMPLERS[kind](graph, rng, c, params or {})
    vertices = np.array(c.order, dtype=np.int64)
    return SampledDegreeSet(vertices, graph.degrees[vertices].copy(), kind, int(budget))


def naive_scale(sample: SampledDegreeSet, n: int) -> CCDH:
    """Scale the sample's ccdh by ``n / |sample|``."""
    if sample.budget_used == 0:
        raise InvalidParameterError("sample is empty")
    return ccdh_from_degrees(sample.degrees, weight=n / sample.budget_used, n_total=n)
