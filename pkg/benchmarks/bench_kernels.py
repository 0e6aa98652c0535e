"""Compare the compiled and pure-Python kernel backends.

Usage: python benchmarks/bench_kernels.py [--n 100000] [--repeat 3]

Times each kernel in isolation on identical inputs, checks that both
backends return identical results, then times end-to-end HDM runs in
subprocesses with and without ``SADDLES_PURE_PYTHON``.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from saddles.kernels import available_backends

END_TO_END = """
import time
from saddles.estimator import SamplerConfig, estimate_ccdh
from saddles.graph import generate_power_law
from saddles import kernels
t0 = time.perf_counter()
g = generate_power_law({n}, 2.1, seed=1)
t1 = time.perf_counter()
cfg = SamplerConfig.defaults(g.n, g.max_degree, model="hdm")
for s in range(10):
    estimate_ccdh(g, cfg.with_seed(s))
t2 = time.perf_counter()
print(kernels.BACKEND, t1 - t0, t2 - t1)
"""


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench_collision(mod, repeat):
    rng = np.random.default_rng(0)
    blocks = [rng.integers(d, size=int(12 * np.sqrt(50 * d))) for d in (100, 1000, 10_000, 100_000) for _ in range(50)]
    return best_of(lambda: [mod.collision_stop(b, 25) for b in blocks], repeat)


def bench_chung_lu(mod, n, repeat):
    w = np.arange(1, n + 1, dtype=float) ** (-1 / 1.1)
    w *= 10 * n / w.sum()
    total = float(w.sum())
    uniforms = np.random.default_rng(1).random(4 * 10 * n)
    src = np.empty(10 * n, dtype=np.int64)
    dst = np.empty(10 * n, dtype=np.int64)
    return best_of(lambda: mod.chung_lu_block(w, total, uniforms, 0, 0, 0, -1.0, src, dst)[:2], repeat)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'kernel':<16}{'backend':<10}{'seconds':>10}")
    results = {}
    for name, mod in sorted(backends.items()):
        t, out = bench_collision(mod, args.repeat)
        results.setdefault("collision_stop", {})[name] = out
        print(f"{'collision_stop':<16}{name:<10}{t:>10.4f}")
        t, out = bench_chung_lu(mod, args.n, args.repeat)
        results.setdefault("chung_lu_block", {})[name] = out
        print(f"{'chung_lu_block':<16}{name:<10}{t:>10.4f}")
    for kernel, outs in results.items():
        values = list(outs.values())
        assert all(v == values[0] for v in values), f"{kernel}: backends disagree"
    print("backends agree on all kernel outputs")

    print(f"\nend to end, n={args.n}: generate + 10 HDM runs")
    for pure in ([False, True] if "cython" in backends else [True]):
        env = dict(os.environ)
        env.pop("SADDLES_PURE_PYTHON", None)
        if pure:
            env["SADDLES_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", END_TO_END.format(n=args.n)], env=env,
                             capture_output=True, text=True, check=True).stdout.split()
        print(f"{out[0]:<10} generate {float(out[1]):.3f}s  estimate {float(out[2]):.3f}s")


if __name__ == "__main__":
    main()
