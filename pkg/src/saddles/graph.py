"""Immutable CSR graphs, exact degree statistics and synthetic power-law graphs."""
from __future__ import annotations

import io
import os
import warnings
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidInputError, InvalidParameterError, ParseError


def _frozen(a, dtype=np.int64):
    a = np.ascontiguousarray(a, dtype=dtype)
    a.setflags(write=False)
    return a


class Graph:
    """Undirected simple graph in compressed sparse row form.

    Every undirected edge is stored in both directions, so ``neighbors`` has
    length ``2 * m``. Vertices are ``0..n-1``; ``labels[v]`` is the original
    external id of ``v`` when the graph was loaded or relabeled.
    """

    __slots__ = ("offsets", "neighbors", "labels", "_degrees")

    def __init__(self, offsets, neighbors, labels=None):
        object.__setattr__(self, "offsets", _frozen(offsets))
        object.__setattr__(self, "neighbors", _frozen(neighbors))
        object.__setattr__(self, "labels", None if labels is None else _frozen(labels))
        object.__setattr__(self, "_degrees", _frozen(np.diff(self.offsets)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return len(self.offsets) - 1

    @property
    def m(self) -> int:
        return len(self.neighbors) // 2

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return int(self._degrees.max())

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v]:self.offsets[v + 1]]

    def edge_array(self) -> np.ndarray:
        """Each undirected edge once, as rows ``(u, v)`` with ``u < v``."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self._degrees)
        keep = src < self.neighbors
        return np.column_stack([src[keep], self.neighbors[keep]])

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @classmethod
    def from_edges(cls, edges, drop_isolated=True, n=None):
        """Build a cleaned graph from an ``(E, 2)`` integer array of edges.

        Self-loops and parallel edges are removed and direction is ignored.
        With ``drop_isolated`` the remaining vertices are densely relabeled
        and their original ids kept in ``labels``.
        """
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if len(e) and e.min() < 0:
            raise InvalidInputError("vertex ids must be non-negative")
        e = e[e[:, 0] != e[:, 1]]
        if len(e) == 0:
            raise InvalidInputError("graph is empty after removing self-loops")
        e = np.sort(e, axis=1)
        e = np.unique(e, axis=0)
        if drop_isolated:
            labels, flat = np.unique(e.ravel(), return_inverse=True)
            e = flat.reshape(-1, 2)
            n = len(labels)
        else:
            labels = None
            n = int(e.max()) + 1 if n is None else n
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
        return cls(offsets, dst, labels)


def _read_text(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return fh.read()
    data = source.read()
    return data.encode() if isinstance(data, str) else data


def _find_bad_line(data: bytes, source):
    for lineno, raw in enumerate(data.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(b"#"):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise ParseError("expected two vertex ids", lineno, source)
        for tok in tokens[:2]:
            try:
                value = int(tok)
            except ValueError:
                raise ParseError(f"non-integer vertex id {tok.decode(errors='replace')!r}",
                                 lineno, source) from None
            if value < 0:
                raise ParseError(f"negative vertex id {value}", lineno, source)
    raise ParseError("malformed edge list", None, source)


def load_edge_list(source, comment="#"):
    """Load a SNAP-style whitespace-separated edge list.

    `source` is a path or a binary/text stream. Columns past the second are
    ignored. The result is cleaned as in :meth:`Graph.from_edges`.
    """
    name = os.fspath(source) if isinstance(source, (str, os.PathLike)) else None
    data = _read_text(source)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UserWarning)  # empty input
            edges = np.loadtxt(io.BytesIO(data), comments=comment, dtype=np.int64,
                               usecols=(0, 1), ndmin=2)
    except ValueError:
        _find_bad_line(data, name)
    if len(edges) and edges.min() < 0:
        _find_bad_line(data, name)
    if len(edges) == 0:
        raise InvalidInputError("edge list contains no edges")
    return Graph.from_edges(edges)


class CCDH:
    """Complementary cumulative degree histogram, ``N(d) = #{v : deg(v) >= d}``.

    Stored densely as ``values[d]`` for ``d = 0..max_degree`` (``values[0]``
    mirrors ``values[1]``). Lookups beyond the stored range return 0; degree
    arguments below 1 are clamped to 1. Values may be real for estimates.
    """

    def __init__(self, values, n_total=None):
        values = np.asarray(values, dtype=float)
        nz = np.flatnonzero(values[1:] > 0)
        self.max_degree = int(nz[-1]) + 1 if len(nz) else 0
        self.values = values[: self.max_degree + 1].copy()
        self.values.setflags(write=False)
        self.n_total = float(values[1]) if n_total is None else n_total

    def __call__(self, d):
        d = np.asarray(d)
        idx = np.clip(d, 1, None).astype(np.int64)
        out = np.zeros(idx.shape, dtype=float)
        inside = idx <= self.max_degree
        out[inside] = self.values[idx[inside]]
        return out if out.ndim else float(out)

    def items(self):
        """``(d, N(d))`` for every ``d >= 1`` with ``N(d) > 0``."""
        d = np.arange(1, self.max_degree + 1)
        return list(zip(d.tolist(), self.values[1:].tolist()))

    def to_csv(self, fh):
        fh.write("d,N\n")
        for d, v in self.items():
            fh.write(f"{d},{_fmt(v)}\n")
        fh.write(f"{self.max_degree + 1},0\n")

    def __eq__(self, other):
        return isinstance(other, CCDH) and np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"CCDH(n_total={self.n_total:g}, max_degree={self.max_degree})"


def _fmt(x):
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def ccdh_from_degrees(degrees, weight=1.0, n_total=None):
    """CCDH of a degree multiset, each vertex counted with `weight`."""
    degrees = np.asarray(degrees, dtype=np.int64)
    hist = np.bincount(degrees, minlength=2).astype(float) * weight
    values = np.cumsum(hist[::-1])[::-1]
    values[0] = values[1]
    return CCDH(values, n_total)


def exact_ccdh(g: Graph) -> CCDH:
    return ccdh_from_degrees(g.degrees, n_total=g.n)


@dataclass(frozen=True)
class FatnessIndices:
    h: int
    z: float
    minimax: int


def fatness_indices(c: CCDH) -> FatnessIndices:
    """h-index, z-index and ``min_d max(d, N(d))`` of a ccdh."""
    if c.max_degree < 1:
        raise InvalidInputError("ccdh is empty")
    d = np.arange(1, c.max_degree + 1)
    N = c.values[1:]
    h = int(d[N >= d].max()) if np.any(N >= d) else 0
    z = float(np.sqrt((d * N)[N > 0].min()))
    # beyond max_degree N = 0, so max(d, N) = d > max_degree there
    minimax = int(min(np.maximum(d, N).min(), c.max_degree + 1))
    return FatnessIndices(h=h, z=z, minimax=minimax)


def graph_stats(g: Graph) -> dict:
    idx = fatness_indices(exact_ccdh(g))
    return {
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree,
        "avg_degree": 2 * g.m / g.n,
        "h_index": idx.h,
        "z_index": idx.z,
    }


def generate_power_law(n, gamma, seed=None, avg_degree=10.0, block=1 << 18):
    """Chung-Lu random graph with power-law expected degrees.

    Vertex ``i = 1..n`` gets weight ``w_i = c * i ** (-1 / (gamma - 1))`` with
    `c` chosen so the mean weight is `avg_degree`. Each pair ``(u, v)`` is
    joined independently with probability ``min(1, w_u * w_v / sum(w))``,
    realized by geometric skip sampling in ``O(n + m)``. Isolated vertices are
    dropped; ``labels`` holds the 0-based weight rank of each vertex.
    """
    if gamma <= 2:
        raise InvalidParameterError(f"gamma must exceed 2, got {gamma}")
    if n < 2:
        raise InvalidParameterError(f"n must be at least 2, got {n}")
    if avg_degree <= 0:
        raise InvalidParameterError("avg_degree must be positive")
    rng = np.random.default_rng(seed)
    w = np.arange(1, n + 1, dtype=float) ** (-1.0 / (gamma - 1.0))
    w *= avg_degree * n / w.sum()
    total = float(w.sum())

    src_parts, dst_parts = [], []
    out_src = np.empty(block, dtype=np.int64)
    out_dst = np.empty(block, dtype=np.int64)
    u, v, p = 0, 0, -1.0
    while u < n - 1:
        uniforms = rng.random(block)
        pos = 0
        while True:
            ne, pos, u, v, p = kernels.chung_lu_block(
                w, total, uniforms, pos, u, v, p, out_src, out_dst)
            src_parts.append(out_src[:ne].copy())
            dst_parts.append(out_dst[:ne].copy())
            if u >= n - 1 or pos + 2 > block:
                break
    src = np.concatenate(src_parts)
    dst = np.concatenate(dst_parts)
    if len(src) == 0:
        raise InvalidInputError("generated graph has no edges")
    return Graph.from_edges(np.column_stack([src, dst]))


def write_edge_list(g: Graph, fh):
    labels = g.labels if g.labels is not None else np.arange(g.n)
    e = g.edge_array()
    fh.write(f"# n={g.n} m={g.m}\n")
    for a, b in zip(labels[e[:, 0]].tolist(), labels[e[:, 1]].tolist()):
        fh.write(f"{a}\t{b}\n")

