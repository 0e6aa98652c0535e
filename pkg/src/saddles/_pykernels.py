"""Pure-Python implementations of the hot kernels.

These mirror ``_ckernels.pyx`` step for step: given the same inputs they
consume the same random numbers and return the same outputs.
"""
import math

import numpy as np

BACKEND = "python"


def collision_stop(samples, k):
    """Return the prefix length at which pairwise collisions first reach `k`.

    A new sample equal to a value already seen `c` times adds `c` colliding
    pairs. Returns -1 if the whole array is consumed before reaching `k`.
    """
    seen = {}
    pairs = 0
    for i, x in enumerate(samples.tolist()):
        c = seen.get(x, 0)
        pairs += c
        seen[x] = c + 1
        if pairs >= k:
            return i + 1
    return -1


def chung_lu_block(w, total, uniforms, pos, u, v, p, out_src, out_dst):
    """Advance the skip-sampling Chung-Lu generator over a block of uniforms.

    Rows `u` are processed in order of decreasing weight; within row `u`,
    candidates ``v > u`` are visited with geometric skips. State ``(u, v, p)``
    is resumable: ``p < 0`` means row `u` has not been started.

    Returns ``(n_edges, pos, u, v, p)``. The generator is finished when
    ``u >= len(w) - 1``.
    """
    n = len(w)
    nu = len(uniforms)
    cap = len(out_src)
    w = w.tolist() if isinstance(w, np.ndarray) else w
    ne = 0
    while u < n - 1:
        if p < 0:
            v = u + 1
            p = min(w[u] * w[v] / total, 1.0)
        if v >= n or p <= 0:
            u += 1
            p = -1.0
            continue
        if pos + 2 > nu or ne >= cap:
            break
        if p < 1.0:
            r = 1.0 - uniforms[pos]
            pos += 1
            skip = math.floor(math.log(r) / math.log1p(-p))
            if skip >= n:
                v = n
            else:
                v += int(skip)
        if v < n:
            q = min(w[u] * w[v] / total, 1.0)
            if uniforms[pos] < q / p:
                out_src[ne] = u
                out_dst[ne] = v
                ne += 1
            pos += 1
            p = q
            v += 1
    return ne, pos, u, v, p
