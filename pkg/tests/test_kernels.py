import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from saddles import kernels

BACKENDS = kernels.available_backends()


def brute_collision_stop(samples, k):
    for s in range(1, len(samples) + 1):
        prefix = samples[:s]
        pairs = sum(1 for i in range(s) for j in range(i + 1, s) if prefix[i] == prefix[j])
        if pairs >= k:
            return s
    return -1


@pytest.mark.parametrize("backend", sorted(BACKENDS))
@given(samples=st.lists(st.integers(0, 12), max_size=40), k=st.integers(1, 30))
@settings(max_examples=200, deadline=None)
def test_collision_stop_matches_brute_force(backend, samples, k):
    arr = np.array(samples, dtype=np.int64)
    assert BACKENDS[backend].collision_stop(arr, k) == brute_collision_stop(samples, k)


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_collision_stop_large_ids(backend):
    arr = np.array([2**40, 7, 2**40 + 1, 7, 2**40], dtype=np.int64)
    assert BACKENDS[backend].collision_stop(arr, 2) == 5


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")
@given(n=st.integers(2, 60), gamma=st.floats(2.05, 3.5), seed=st.integers(0, 10**6),
       block=st.integers(2, 50), cap=st.integers(1, 20))
@settings(max_examples=100, deadline=None)
def test_chung_lu_backends_agree_with_tiny_blocks(n, gamma, seed, block, cap):
    # tiny uniform blocks and output buffers exercise state resumption
    rng = np.random.default_rng(seed)
    w = np.arange(1, n + 1, dtype=float) ** (-1 / (gamma - 1)) * 3
    total = float(w.sum())
    results = {}
    for name, mod in BACKENDS.items():
        edges = []
        u, v, p = 0, 0, -1.0
        stream = np.random.default_rng(seed + 1)
        while u < n - 1:
            uni = stream.random(block)
            pos = 0
            while True:
                src = np.empty(cap, dtype=np.int64)
                dst = np.empty(cap, dtype=np.int64)
                ne, pos, u, v, p = mod.chung_lu_block(w, total, uni, pos, u, v, p, src, dst)
                edges += list(zip(src[:ne].tolist(), dst[:ne].tolist()))
                if u >= n - 1 or pos + 2 > block:
                    break
        results[name] = edges
    assert results["python"] == results["cython"]
    assert all(a < b for a, b in results["python"])
    assert len(set(results["python"])) == len(results["python"])


def test_chung_lu_edge_probabilities():
    # exhaustive frequency check of each pair's inclusion against min(1, w_u w_v / S)
    n = 5
    w = np.array([4.0, 3.0, 2.0, 1.0, 0.5])
    total = float(w.sum())
    counts = np.zeros((n, n))
    rng = np.random.default_rng(0)
    trials = 20000
    mod = BACKENDS["python"] if "cython" not in BACKENDS else BACKENDS["cython"]
    src = np.empty(64, dtype=np.int64)
    dst = np.empty(64, dtype=np.int64)
    for _ in range(trials):
        u, v, p = 0, 0, -1.0
        while u < n - 1:
            uni = rng.random(64)
            ne, pos, u, v, p = mod.chung_lu_block(w, total, uni, 0, u, v, p, src, dst)
            for a, b in zip(src[:ne], dst[:ne]):
                counts[a, b] += 1
    for a in range(n):
        for b in range(a + 1, n):
            expected = min(1.0, w[a] * w[b] / total)
            sd = np.sqrt(expected * (1 - expected) / trials) + 1e-12
            assert abs(counts[a, b] / trials - expected) <= 5 * sd + 1e-9
