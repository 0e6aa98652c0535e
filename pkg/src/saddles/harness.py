"""Experiment runs producing schema-stable result rows.

Ground truth is computed separately from estimation and joined afterwards;
estimators only ever see the graph through a :class:`QueryOracle`.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .baselines import BaselineKind, collect, naive_scale
from .errors import InvalidParameterError
from .estimator import EstimateSeries, SamplerConfig, estimate_ccdh
from .graph import CCDH, Graph, exact_ccdh
from .metrics import alpha_error

ESTIMATE_COLUMNS = (
    "method", "run_index", "d", "N_true", "N_est", "branch", "alpha", "feasible",
    "model", "r", "q", "ell", "tau", "k", "budget", "seed", "outside_sm",
)
CONVERGENCE_COLUMNS = ("d", "budget", "run_index", "seed", "r", "q", "N_true", "N_est", "alpha")


def parse_budget(text, n) -> int:
    """Absolute count (``"500"``), fraction (``"0.01"``) or percent (``"1%"``) of n."""
    s = str(text).strip()
    try:
        if s.endswith("%"):
            value = float(s[:-1]) / 100 * n
        elif "." in s or "e" in s.lower():
            value = float(s) * n
        else:
            value = int(s)
    except ValueError:
        raise InvalidParameterError(f"cannot parse budget {text!r}") from None
    count = math.ceil(value - 1e-9)
    if count < 1:
        raise InvalidParameterError(f"budget {text!r} is below one vertex for n={n}")
    return count


def parse_fraction(text) -> float:
    s = str(text).strip()
    try:
        value = float(s[:-1]) / 100 if s.endswith("%") else float(s)
    except ValueError:
        raise InvalidParameterError(f"cannot parse fraction {text!r}") from None
    if not (0 < value <= 1):
        raise InvalidParameterError(f"fraction {text!r} must lie in (0, 1]")
    return value


@dataclass
class RunReport:
    dataset: str
    method: str
    seed: int | None
    rows: list
    ledger: dict | None = None
    duration: float = 0.0
    series: EstimateSeries | None = field(default=None, repr=False)


def _truth_columns(truth: CCDH | None, d, est):
    if truth is None:
        return {"N_true": "", "alpha": "", "feasible": ""}
    a = alpha_error(truth, int(d), float(est))
    return {"N_true": truth(int(d)), "alpha": a.alpha, "feasible": a.feasible}


def run_estimate(graph: Graph, config: SamplerConfig, dataset="", truth: CCDH | None = None,
                 run_index=0, monotone=False) -> RunReport:
    t0 = time.perf_counter()
    series = estimate_ccdh(graph, config)
    duration = time.perf_counter() - t0
    estimates = series.monotone_envelope() if monotone else series.estimates
    rows = []
    for d, est, br in zip(series.degrees.tolist(), estimates.tolist(), series.branch_labels().tolist()):
        row = {"method": "saddles", "run_index": run_index, "d": d, "N_est": est, "branch": br}
        row.update(config.as_dict())
        row.update({"budget": "", "outside_sm": False})
        row.update(_truth_columns(truth, d, est))
        rows.append(row)
    return RunReport(dataset, "saddles", config.seed, rows,
                     series.ledger.row(graph.n, graph.m), duration, series)


def run_baseline(graph: Graph, method, budget: int, degrees, seed=None, dataset="",
                 truth: CCDH | None = None, run_index=0, params=None) -> RunReport:
    kind = BaselineKind.parse(method)
    t0 = time.perf_counter()
    sample = collect(graph, kind, budget, params=params, seed=seed)
    est_ccdh = naive_scale(sample, graph.n)
    duration = time.perf_counter() - t0
    rows = []
    for d in degrees:
        est = est_ccdh(int(d))
        row = {
            "method": kind.value, "run_index": run_index, "d": int(d), "N_est": est, "branch": "",
            "model": "", "r": "", "q": "", "ell": "", "tau": "", "k": "",
            "budget": budget, "seed": seed, "outside_sm": kind.outside_sm,
        }
        row.update(_truth_columns(truth, d, est))
        rows.append(row)
    return RunReport(dataset, kind.value, seed, rows, None, duration)


def run_convergence(graph: Graph, degrees, budgets, runs, seed=0, truth: CCDH | None = None,
                    **config_kw) -> list:
    """Alpha per independent run at each (degree, budget).

    Each budget is a fraction of n split evenly, ``r = q = budget * n / 2``.
    Run ``i`` uses seed ``seed + i``; every degree is estimated in the same run.
    """
    if runs < 1:
        raise InvalidParameterError("runs must be at least 1")
    truth = exact_ccdh(graph) if truth is None else truth
    degrees = tuple(sorted(int(d) for d in degrees))
    rows = []
    for b in budgets:
        half = max(1, round(b * graph.n / 2))
        config = SamplerConfig(r=half, q=half, degrees=degrees, **config_kw)
        for i in range(runs):
            series = estimate_ccdh(graph, config.with_seed(seed + i))
            for d, est in zip(degrees, series.estimates.tolist()):
                rows.append({
                    "d": d, "budget": b, "run_index": i, "seed": seed + i, "r": half, "q": half,
                    "N_true": truth(d), "N_est": est, "alpha": alpha_error(truth, d, est).alpha,
                })
    rows.sort(key=lambda row: (row["d"], row["budget"], row["run_index"]))
    return rows


def median_alpha(rows, d, budget):
    return float(np.median([r["alpha"] for r in rows if r["d"] == d and r["budget"] == budget]))
