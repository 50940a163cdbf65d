"""Kernel backend selection.

The solver's hot loop (ant clique construction) has two interchangeable
implementations: a Cython extension (``swarmclique._kernel``) and a pure
Python fallback (``swarmclique._kernel_py``). The compiled one is picked
at import time when present; set ``SWARMCLIQUE_BACKEND=pure`` (or ``c``)
to force a choice. Both produce byte-identical results for the same seed,
so switching backends never changes an experiment, only its speed.
"""

from __future__ import annotations

import os
from typing import Optional

import numpy as np

from . import _kernel_py
from .graph import Graph
from .rng import MASK64

try:
    from . import _kernel as _c_kernel
except ImportError:
    _c_kernel = None

_ENV_VAR = "SWARMCLIQUE_BACKEND"


class PureBackend:
    name = "pure"

    def prepare(self, g: Graph):
        cached = g.__dict__.get("_kernel_prep_pure")
        if cached is None:
            cached = _kernel_py.prepare(g)
            g.__dict__["_kernel_prep_pure"] = cached
        return cached

    def run_iteration(self, prep, tau: np.ndarray, alpha: float, ants: int,
                      seed: int, t: int) -> list[list[int]]:
        return _kernel_py.run_iteration(prep, tau, alpha, ants,
                                        seed & MASK64, t)


class CBackend:
    name = "c"

    def prepare(self, g: Graph):
        cached = g.__dict__.get("_kernel_prep_c")
        if cached is None:
            cached = _c_prepare(g)
            g.__dict__["_kernel_prep_c"] = cached
        return cached

    def run_iteration(self, prep, tau: np.ndarray, alpha: float, ants: int,
                      seed: int, t: int) -> list[list[int]]:
        n, nwords, adj_bits, indptr, nbrs, eids = prep
        return _c_kernel.run_iteration(n, nwords, adj_bits, indptr, nbrs,
                                       eids, tau, alpha, ants,
                                       seed & MASK64, t)


def _c_prepare(g: Graph):
    """Flatten the graph into the arrays the extension consumes: a bitset
    adjacency matrix plus CSR neighbor/edge-id lists."""
    n = g.n
    nwords = max(1, (n + 63) >> 6)
    adj_bits = np.zeros(n * nwords, dtype=np.uint64)
    for v in range(n):
        mask = g._adj[v]
        base = v * nwords
        wi = 0
        while mask:
            adj_bits[base + wi] = mask & MASK64
            mask >>= 64
            wi += 1
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        indptr[v + 1] = indptr[v] + len(g._inc[v])
    nbrs = np.empty(indptr[n], dtype=np.int32)
    eids = np.empty(indptr[n], dtype=np.int32)
    pos = 0
    for v in range(n):
        for w, eid in g._inc[v]:
            nbrs[pos] = w
            eids[pos] = eid
            pos += 1
    return (n, nwords, adj_bits, indptr, nbrs, eids)


_BACKENDS = {"pure": PureBackend()}
if _c_kernel is not None:
    _BACKENDS["c"] = CBackend()


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def default_backend() -> str:
    forced = os.environ.get(_ENV_VAR)
    if forced:
        if forced not in _BACKENDS:
            raise RuntimeError(
                f"{_ENV_VAR}={forced!r} requested but only "
                f"{available_backends()} available")
        return forced
    return "c" if "c" in _BACKENDS else "pure"


def get_backend(name: Optional[str] = None):
    if name is None:
        name = default_backend()
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; "
                         f"available: {available_backends()}") from None
