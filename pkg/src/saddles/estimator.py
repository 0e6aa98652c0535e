"""The SADDLES ccdh estimator: vertex sampling for the head, simulated edge
sampling for the tail, median boosting over independent trials."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .degree import DEFAULT_K, DegreeProbe, effective_degrees
from .errors import InvalidParameterError
from .graph import Graph
from .oracle import ModelKind, QueryLedger, QueryOracle

DEFAULT_TAU = 100
DEFAULT_FRACTION = 0.005


def default_degree_set(max_degree: int) -> np.ndarray:
    """Distinct values of ``floor(1.1 ** i)`` for ``i >= 0`` up to `max_degree`."""
    if max_degree < 1:
        raise InvalidParameterError("max_degree must be at least 1")
    out = []
    num, den = 1, 1
    while num // den <= max_degree:
        d = num // den
        if not out or d != out[-1]:
            out.append(d)
        num *= 11
        den *= 10
    return np.array(out, dtype=np.int64)


@dataclass(frozen=True)
class SamplerConfig:
    r: int
    q: int
    degrees: tuple
    model: ModelKind = ModelKind.STANDARD
    ell: int = 1
    tau: float = DEFAULT_TAU
    k: int = DEFAULT_K
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "model", ModelKind.parse(self.model))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        for name in ("r", "q", "ell", "tau", "k"):
            if getattr(self, name) < 1:
                raise InvalidParameterError(f"{name} must be at least 1, got {getattr(self, name)}")
        d = self.degrees
        if not d:
            raise InvalidParameterError("degree set is empty")
        if d[0] < 1 or any(b <= a for a, b in zip(d, d[1:])):
            raise InvalidParameterError("degrees must be positive and strictly increasing")

    @classmethod
    def defaults(cls, n, max_degree, **overrides):
        """Default parameters for an `n`-vertex graph: ``r = q = ceil(0.005 n)``,
        ``ell = 1``, ``tau = 100``, ``k = 25`` and the ``floor(1.1 ** i)`` degrees."""
        budget = max(1, math.ceil(DEFAULT_FRACTION * n))
        base = dict(r=budget, q=budget, degrees=tuple(default_degree_set(max_degree).tolist()))
        base.update(overrides)
        return cls(**base)

    def with_seed(self, seed):
        return replace(self, seed=seed)

    def as_dict(self):
        return {
            "model": self.model.value, "r": self.r, "q": self.q, "ell": self.ell,
            "tau": self.tau, "k": self.k, "seed": self.seed,
        }


@dataclass
class TrialResult:
    values: np.ndarray
    vertex_branch: np.ndarray
    X: np.ndarray
    Y: np.ndarray
    d_hat_R: float


@dataclass
class EstimateSeries:
    degrees: np.ndarray
    estimates: np.ndarray
    trial_values: np.ndarray
    vertex_branch: np.ndarray
    ledger: QueryLedger
    config: SamplerConfig
    extra: dict = field(default_factory=dict)

    def branch_labels(self):
        """'V' where most trials used the vertex branch, else 'E'."""
        share = self.vertex_branch.mean(axis=0)
        return np.where(share > 0.5, "V", "E")

    def monotone_envelope(self):
        """Smallest non-increasing sequence dominating the estimates."""
        return np.maximum.accumulate(self.estimates[::-1])[::-1]

    def as_dict(self):
        return dict(zip(self.degrees.tolist(), self.estimates.tolist()))


def _count_at_least(values, degrees):
    """``#{x in values : x >= d}`` for each d."""
    s = np.sort(values)
    return len(s) - np.searchsorted(s, degrees, side="left")


def _inverse_sum_at_least(values, degrees):
    """``sum(1 / x for x in values if x >= d)`` for each d."""
    s = np.sort(values)
    inv = 1.0 / s
    suffix = np.concatenate([np.cumsum(inv[::-1])[::-1], [0.0]])
    return suffix[np.searchsorted(s, degrees, side="left")]


def run_trial(oracle: QueryOracle, probe: DegreeProbe, config: SamplerConfig) -> TrialResult:
    """One trial: estimates for every degree in ``config.degrees``."""
    if oracle.model is not config.model:
        raise InvalidParameterError("oracle model does not match config model")
    D = np.asarray(config.degrees, dtype=float)
    n, r, q = oracle.n, config.r, config.q

    R = oracle.random_vertices(r)
    d_R = effective_degrees(oracle, probe, R)
    X = _count_at_least(d_R, D)
    d_hat_R = float(d_R.sum())

    cum = np.cumsum(d_R)
    picks = np.searchsorted(cum, oracle.rng.random(q) * cum[-1], side="right")
    picks = np.minimum(picks, r - 1)
    U = oracle.random_neighbors(R[picks])
    d_U = effective_degrees(oracle, probe, U)
    Y = _inverse_sum_at_least(d_U, D)

    vertex_branch = X >= config.tau
    values = np.where(vertex_branch, n * X / r, (n / r) * (d_hat_R / q) * Y)
    return TrialResult(values=values, vertex_branch=vertex_branch, X=X, Y=Y, d_hat_R=d_hat_R)


def run_saddles(oracle: QueryOracle, config: SamplerConfig, probe: DegreeProbe | None = None) -> EstimateSeries:
    """Run ``config.ell`` trials through `oracle` and take per-degree medians.

    The degree memo in `probe` is shared by all trials of the run.
    """
    if probe is None:
        probe = DegreeProbe(config.k)
    trials = [run_trial(oracle, probe, config) for _ in range(config.ell)]
    values = np.vstack([t.values for t in trials])
    branch = np.vstack([t.vertex_branch for t in trials])
    return EstimateSeries(
        degrees=np.asarray(config.degrees, dtype=np.int64),
        estimates=np.median(values, axis=0),
        trial_values=values,
        vertex_branch=branch,
        ledger=oracle.snapshot_ledger(),
        config=config,
        extra={"d_hat_R": [t.d_hat_R for t in trials]},
    )


def estimate_ccdh(graph: Graph, config: SamplerConfig) -> EstimateSeries:
    """Estimate the ccdh of `graph` at ``config.degrees``; deterministic in the seed."""
    oracle = QueryOracle(graph, config.model, seed=config.seed)
    return run_saddles(oracle, config)
