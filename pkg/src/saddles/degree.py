"""Birthday-paradox degree estimation for the hidden degrees model."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidParameterError
from .oracle import ModelKind, QueryOracle

DEFAULT_K = 25


@dataclass(frozen=True)
class DegreeEstimate:
    vertex: int
    d_hat: float
    samples_used: int


def _single_shot(oracle: QueryOracle, v: int, k: int) -> tuple[float, int]:
    """Sample neighbors until `k` colliding pairs; estimate ``C(|S|, 2) / k``."""
    samples = oracle.neighbor_run(v, lambda s: kernels.collision_stop(s, k))
    s = len(samples)
    return s * (s - 1) / 2 / k, s


class DegreeProbe:
    """Memoized degree estimates for one run.

    The first estimate for a vertex is stored; later requests return it
    without issuing any queries. With ``repetitions > 1`` the stored value is
    the median of that many independent single-shot estimates.
    """

    def __init__(self, k=DEFAULT_K, repetitions=1):
        if k < 1:
            raise InvalidParameterError(f"k must be at least 1, got {k}")
        if repetitions < 1:
            raise InvalidParameterError("repetitions must be at least 1")
        self.k = int(k)
        self.repetitions = int(repetitions)
        self._memo: dict[int, float] = {}

    def reset(self):
        self._memo.clear()

    def __len__(self):
        return len(self._memo)

    def deg(self, oracle: QueryOracle, v: int) -> DegreeEstimate:
        v = int(v)
        hit = self._memo.get(v)
        if hit is not None:
            return DegreeEstimate(v, hit, 0)
        if self.repetitions == 1:
            d_hat, used = _single_shot(oracle, v, self.k)
        else:
            shots = [_single_shot(oracle, v, self.k) for _ in range(self.repetitions)]
            d_hat = float(np.median([x for x, _ in shots]))
            used = sum(s for _, s in shots)
        self._memo[v] = d_hat
        return DegreeEstimate(v, d_hat, used)


def deg(probe: DegreeProbe, oracle: QueryOracle, v: int, k: int | None = None) -> DegreeEstimate:
    """Estimate the degree of `v`; `k` overrides the probe's threshold."""
    if k is not None and k != probe.k:
        if k < 1:
            raise InvalidParameterError(f"k must be at least 1, got {k}")
        probe.k = int(k)
        probe.reset()
    return probe.deg(oracle, v)


def effective_degree(oracle: QueryOracle, probe: DegreeProbe, v: int) -> float:
    """Exact degree under the standard model, memoized estimate otherwise."""
    if oracle.model is ModelKind.STANDARD:
        return float(oracle.degree_query(v))
    return probe.deg(oracle, v).d_hat


def effective_degrees(oracle: QueryOracle, probe: DegreeProbe, vs) -> np.ndarray:
    """Vectorized :func:`effective_degree` over `vs`, in order."""
    if oracle.model is ModelKind.STANDARD:
        return oracle.degree_queries(vs).astype(float)
    return np.array([probe.deg(oracle, v).d_hat for v in np.asarray(vs).tolist()], dtype=float)
