from fractions import Fraction

import numpy as np
import pytest

from saddles.degree import DegreeProbe
from saddles.errors import InvalidParameterError
from saddles.estimator import SamplerConfig, default_degree_set, estimate_ccdh, run_trial, run_saddles
from saddles.graph import exact_ccdh, generate_power_law
from saddles.metrics import vertex_weights
from saddles.oracle import ModelKind, QueryOracle

from conftest import gnp_graph, small_fixtures, star_graph


def test_default_degree_set_small():
    assert default_degree_set(5).tolist() == [1, 2, 3, 4, 5]
    assert default_degree_set(1).tolist() == [1]


def test_default_degree_set_against_enumeration():
    expected = sorted({int(Fraction(11, 10) ** i) for i in range(120)} & set(range(1, 20001)))
    got = default_degree_set(20000).tolist()
    assert got == expected
    assert set(range(1, 12)) <= set(got)
    assert all(b > a for a, b in zip(got, got[1:]))


def test_config_validation():
    with pytest.raises(InvalidParameterError):
        SamplerConfig(r=0, q=1, degrees=(1,))
    with pytest.raises(InvalidParameterError):
        SamplerConfig(r=1, q=1, degrees=(2, 2))
    with pytest.raises(InvalidParameterError):
        SamplerConfig(r=1, q=1, degrees=())
    with pytest.raises(InvalidParameterError):
        SamplerConfig(r=1, q=1, degrees=(0, 1))


def test_config_defaults():
    cfg = SamplerConfig.defaults(90_664, 22_293)
    assert (cfg.r, cfg.q, cfg.ell, cfg.tau, cfg.k) == (454, 454, 1, 100, 25)
    assert cfg.degrees[0] == 1 and cfg.degrees[-1] <= 22_293


def test_k5_vertex_branch_exact(k5):
    for r in (100, 101, 1000):
        cfg = SamplerConfig(r=r, q=10, degrees=(1,), seed=3)
        est = estimate_ccdh(k5, cfg)
        assert est.estimates[0] == 5.0
        assert est.vertex_branch.all()


def test_k5_degree_four(k5):
    ok = 0
    for seed in range(100):
        est = estimate_ccdh(k5, SamplerConfig(r=1000, q=1000, degrees=(1, 4), seed=seed))
        assert est.estimates[0] == 5.0
        ok += abs(est.estimates[1] - 5) <= 1
    assert ok >= 95


def test_beyond_max_degree_is_zero(k5):
    est = estimate_ccdh(k5, SamplerConfig(r=50, q=50, degrees=(5, 100), seed=1))
    assert est.estimates.tolist() == [0.0, 0.0]


@pytest.mark.parametrize("name,g", list(small_fixtures().items()))
def test_zero_propagation_sm(name, g):
    cfg = SamplerConfig(r=30, q=30, degrees=(g.max_degree + 1, g.max_degree + 7), ell=3, seed=2)
    est = estimate_ccdh(g, cfg)
    assert np.all(est.trial_values == 0)


def test_star_edge_branch_unbiased(star3):
    cfg = SamplerConfig(r=1000, q=1000, degrees=(3,), tau=10**6)
    o = QueryOracle(star3, seed=7)
    probe = DegreeProbe()
    vals = [run_trial(o, probe, cfg).values[0] for _ in range(200)]
    assert np.mean(vals) == pytest.approx(1.0, abs=0.15)


def exhaustive_edge_expectation(g, R, d, n, r):
    """E[(n/r)(d_R/q) sum Y | R] by enumerating every (v, u) with probability
    (d_v / d_R) * (1 / d_v); independent of q."""
    deg = g.degrees
    d_R = sum(int(deg[v]) for v in R)
    e_y = Fraction(0)
    for v in R:
        for u in g.neighbors_of(v).tolist():
            if deg[u] >= d:
                e_y += Fraction(int(deg[v]), d_R) * Fraction(1, int(deg[v])) * Fraction(1, int(deg[u]))
    return float(Fraction(n, r) * d_R * e_y)


@pytest.mark.parametrize("seed", range(4))
def test_edge_branch_conditionally_unbiased(seed):
    g = gnp_graph(18, 0.25, seed=seed) or star_graph(5)
    rng = np.random.default_rng(seed)
    r = 6
    R = rng.integers(g.n, size=r)
    for d in range(1, g.max_degree + 1):
        exhaustive = exhaustive_edge_expectation(g, R.tolist(), d, g.n, r)
        closed = g.n / r * vertex_weights(g, d)[R].sum()
        assert exhaustive == pytest.approx(closed, rel=1e-12)

    # the sampler with R pinned matches the enumeration
    cfg = SamplerConfig(r=r, q=400, degrees=tuple(range(1, g.max_degree + 1)), tau=10**9)
    o = QueryOracle(g, seed=seed)
    o.random_vertices = lambda size, _R=R: (_R.copy())
    vals = np.array([run_trial(o, DegreeProbe(), cfg).values for _ in range(600)])
    expected = np.array([exhaustive_edge_expectation(g, R.tolist(), d, g.n, r) for d in cfg.degrees])
    se = vals.std(axis=0) / np.sqrt(len(vals)) + 1e-12
    assert np.all(np.abs(vals.mean(axis=0) - expected) <= 5 * se)


def test_branch_consistency(powerlaw_graph):
    cfg = SamplerConfig.defaults(powerlaw_graph.n, powerlaw_graph.max_degree, seed=4)
    o = QueryOracle(powerlaw_graph, seed=4)
    t = run_trial(o, DegreeProbe(), cfg)
    assert np.array_equal(t.vertex_branch, t.X >= cfg.tau)
    n = powerlaw_graph.n
    assert np.array_equal(t.values[t.vertex_branch], (n * t.X / cfg.r)[t.vertex_branch])
    edge = ~t.vertex_branch
    assert np.allclose(t.values[edge], (n / cfg.r * t.d_hat_R / cfg.q * t.Y)[edge])


def test_determinism(powerlaw_graph):
    cfg = SamplerConfig.defaults(powerlaw_graph.n, powerlaw_graph.max_degree, seed=11, ell=3)
    a = estimate_ccdh(powerlaw_graph, cfg)
    b = estimate_ccdh(powerlaw_graph, cfg)
    assert np.array_equal(a.trial_values, b.trial_values)
    assert a.ledger == b.ledger


def test_hdm_determinism_and_no_degree_queries():
    g = generate_power_law(3000, 2.3, seed=5)
    cfg = SamplerConfig.defaults(g.n, g.max_degree, model="hdm", seed=2, r=60, q=60, ell=2)
    a = estimate_ccdh(g, cfg)
    b = estimate_ccdh(g, cfg)
    assert np.array_equal(a.estimates, b.estimates)
    assert a.ledger.degree_queries == 0
    assert a.ledger.vertex_queries == 120


def test_median_over_trials_even_ell(k5):
    cfg = SamplerConfig(r=20, q=20, degrees=(4,), ell=4, tau=10**6, seed=8)
    est = estimate_ccdh(k5, cfg)
    v = np.sort(est.trial_values[:, 0])
    assert est.estimates[0] == pytest.approx((v[1] + v[2]) / 2)


def test_sm_ledger_counts(powerlaw_graph):
    cfg = SamplerConfig.defaults(powerlaw_graph.n, powerlaw_graph.max_degree, ell=3, seed=1)
    L = estimate_ccdh(powerlaw_graph, cfg).ledger
    assert L.vertex_queries == 3 * cfg.r
    assert L.neighbor_queries == 3 * cfg.q
    assert L.degree_queries <= 3 * (cfg.r + cfg.q)


def test_model_mismatch(k5):
    o = QueryOracle(k5, "hdm", seed=0)
    with pytest.raises(InvalidParameterError):
        run_trial(o, DegreeProbe(), SamplerConfig(r=5, q=5, degrees=(1,)))


def test_memo_shared_across_trials():
    g = generate_power_law(2000, 2.3, seed=6)
    o = QueryOracle(g, "hdm", seed=3)
    probe = DegreeProbe()
    cfg = SamplerConfig(r=200, q=200, degrees=(1, 10), model="hdm", ell=4)
    run_saddles(o, cfg, probe)
    # at most one estimate per distinct vertex touched
    assert len(probe) <= g.n
    before = o.ledger.neighbor_queries
    probe_vertices = list(probe._memo)
    for v in probe_vertices[:50]:
        probe.deg(o, v)
    assert o.ledger.neighbor_queries == before


def test_monotone_envelope(k5):
    est = estimate_ccdh(k5, SamplerConfig(r=20, q=20, degrees=(1, 2, 3, 4), tau=10**6, seed=1))
    env = est.monotone_envelope()
    assert np.all(np.diff(env) <= 0)
    assert np.all(env >= est.estimates)
