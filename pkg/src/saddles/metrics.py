"""Estimate quality: the bicriteria (eps, eps) check, the alpha error, and an
exact edge-weight oracle used to validate the edge-sampling estimator."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .graph import CCDH, Graph

ALPHA_TOL = 1e-4
EPS_MAX = 1 - 1e-9
# slack so that e.g. 1.1 * 10 rounds to 11, not 12
_ROUND_SLACK = 1e-9


def _bounds(ccdh: CCDH, d, eps):
    hi_deg = math.ceil((1 + eps) * d - _ROUND_SLACK)
    lo_deg = max(1, math.floor((1 - eps) * d + _ROUND_SLACK))
    return (1 - eps) * ccdh(hi_deg), (1 + eps) * ccdh(lo_deg)


def eps_check(ccdh: CCDH, d, estimate, eps) -> bool:
    """Whether `estimate` lies in ``[(1-eps) N((1+eps) d), (1+eps) N((1-eps) d)]``.

    ``(1 + eps) d`` is rounded up and ``(1 - eps) d`` down, clamped to 1.
    """
    if not (0 <= eps < 1):
        raise InvalidParameterError(f"eps must lie in [0, 1), got {eps}")
    if d < 1:
        raise InvalidParameterError(f"d must be at least 1, got {d}")
    lo, hi = _bounds(ccdh, d, eps)
    return lo <= estimate <= hi


@dataclass(frozen=True)
class AlphaError:
    d: int
    estimate: float
    alpha: float
    feasible: bool


def alpha_error(ccdh: CCDH, d, estimate, tol=ALPHA_TOL) -> AlphaError:
    """Smallest eps (to `tol`) for which `estimate` is an (eps, eps)-estimate at `d`.

    Feasibility is monotone in eps, so bisection applies. If even eps just
    below 1 fails, alpha is reported as 1 with ``feasible=False``.
    """
    if d < 1:
        raise InvalidParameterError(f"d must be at least 1, got {d}")
    estimate = float(estimate)
    if eps_check(ccdh, d, estimate, 0.0):
        return AlphaError(int(d), estimate, 0.0, True)
    if not eps_check(ccdh, d, estimate, EPS_MAX):
        return AlphaError(int(d), estimate, 1.0, False)
    lo, hi = 0.0, EPS_MAX
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if eps_check(ccdh, d, estimate, mid):
            hi = mid
        else:
            lo = mid
    return AlphaError(int(d), estimate, hi, True)


def alpha_errors(ccdh: CCDH, degrees, estimates):
    return [alpha_error(ccdh, int(d), float(e)) for d, e in zip(degrees, estimates)]


def weight_oracle(graph: Graph, d) -> float:
    """Total d-weight of all ordered edges ``<v, u>`` at exact degrees.

    The weight of ``<v, u>`` is ``1 / deg(u)`` if ``deg(u) >= d`` else 0.
    Summed over every ordered edge this equals ``N(d)``.
    """
    heads = graph.degrees[graph.neighbors]
    terms = 1.0 / heads[heads >= d]
    return math.fsum(terms.tolist())


def vertex_weights(graph: Graph, d) -> np.ndarray:
    """Per-vertex d-weight ``sum over u in nbrs(v) of [deg(u) >= d] / deg(u)``."""
    heads = graph.degrees[graph.neighbors].astype(float)
    contrib = np.where(heads >= d, 1.0 / heads, 0.0)
    return np.add.reduceat(contrib, graph.offsets[:-1]) if graph.n else contrib
