"""Query-model access to a graph with exact query accounting."""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

import numpy as np

from .errors import ContractViolationError, ModelViolationError
from .graph import Graph


class ModelKind(enum.Enum):
    STANDARD = "sm"
    HIDDEN_DEGREES = "hdm"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        v = str(value).lower()
        for kind in cls:
            if v in (kind.value, kind.name.lower()):
                return kind
        raise ValueError(f"unknown query model {value!r}")


LEDGER_COLUMNS = ("vertex_queries", "neighbor_queries", "degree_queries", "pct_of_n", "pct_of_m")


@dataclass
class QueryLedger:
    vertex_queries: int = 0
    neighbor_queries: int = 0
    degree_queries: int = 0

    def __add__(self, other):
        return QueryLedger(
            self.vertex_queries + other.vertex_queries,
            self.neighbor_queries + other.neighbor_queries,
            self.degree_queries + other.degree_queries,
        )

    def copy(self):
        return QueryLedger(**asdict(self))

    def row(self, n, m):
        """Counts plus normalized columns, in :data:`LEDGER_COLUMNS` order.

        ``pct_of_n`` is (vertex + degree queries) / n and ``pct_of_m`` is
        neighbor queries / m, both as percentages.
        """
        return {
            "vertex_queries": self.vertex_queries,
            "neighbor_queries": self.neighbor_queries,
            "degree_queries": self.degree_queries,
            "pct_of_n": 100.0 * (self.vertex_queries + self.degree_queries) / n,
            "pct_of_m": 100.0 * self.neighbor_queries / m,
        }


class QueryOracle:
    """The only gateway from estimators to a graph.

    Offers uniform vertex, uniform neighbor and (under the standard model)
    degree queries, each counted in a :class:`QueryLedger`. Sampling is with
    replacement and all randomness comes from one seeded generator.

    The number of vertices ``n`` is public, as the query model assumes.
    """

    def __init__(self, graph: Graph, model=ModelKind.STANDARD, seed=None):
        self._graph = graph
        self.model = ModelKind.parse(model)
        self.rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        self._ledger = QueryLedger()
        self._offsets = graph.offsets
        self._neighbors = graph.neighbors
        self._degrees = graph.degrees

    @property
    def n(self) -> int:
        return self._graph.n

    @property
    def ledger(self) -> QueryLedger:
        return self._ledger.copy()

    def snapshot_ledger(self) -> QueryLedger:
        return self._ledger.copy()

    def _check(self, v):
        if not (0 <= v < self._graph.n):
            raise ContractViolationError(f"vertex id {v} out of range 0..{self._graph.n - 1}")

    def _check_many(self, vs):
        vs = np.asarray(vs, dtype=np.int64)
        if vs.size and (vs.min() < 0 or vs.max() >= self._graph.n):
            raise ContractViolationError("vertex id out of range")
        return vs

    def random_vertex(self) -> int:
        self._ledger.vertex_queries += 1
        return int(self.rng.integers(self._graph.n))

    def random_vertices(self, size) -> np.ndarray:
        self._ledger.vertex_queries += int(size)
        return self.rng.integers(self._graph.n, size=size)

    def random_neighbor(self, v) -> int:
        self._check(v)
        self._ledger.neighbor_queries += 1
        start = self._offsets[v]
        return int(self._neighbors[start + self.rng.integers(self._degrees[v])])

    def random_neighbors(self, vs) -> np.ndarray:
        """One uniform neighbor for each vertex in `vs`."""
        vs = self._check_many(vs)
        self._ledger.neighbor_queries += len(vs)
        pos = np.floor(self.rng.random(len(vs)) * self._degrees[vs]).astype(np.int64)
        return self._neighbors[self._offsets[vs] + pos]

    def neighbor_run(self, v, stop, first_block=64) -> np.ndarray:
        """Draw uniform neighbors of `v` until ``stop(samples)`` says enough.

        `stop` takes an int64 array of sampled neighbor ids and returns the
        prefix length at which sampling would have stopped, or -1 if it needs
        more. Only that prefix is charged to the ledger; neighbors are drawn in
        growing blocks purely for speed.
        """
        self._check(v)
        deg = int(self._degrees[v])
        start = self._offsets[v]
        samples = np.empty(0, dtype=np.int64)
        size = first_block
        while True:
            block = self._neighbors[start + self.rng.integers(deg, size=size)]
            samples = np.concatenate([samples, block])
            used = stop(samples)
            if used >= 0:
                break
            size = len(samples)
        self._ledger.neighbor_queries += used
        return samples[:used]

    def degree_query(self, v) -> int:
        if self.model is not ModelKind.STANDARD:
            raise ModelViolationError("degree queries are not allowed in the hidden degrees model")
        self._check(v)
        self._ledger.degree_queries += 1
        return int(self._degrees[v])

    def degree_queries(self, vs) -> np.ndarray:
        if self.model is not ModelKind.STANDARD:
            raise ModelViolationError("degree queries are not allowed in the hidden degrees model")
        vs = self._check_many(vs)
        self._ledger.degree_queries += len(vs)
        return self._degrees[vs].copy()
