"""Pure-Python ant-construction kernel.

This is the fallback for :mod:`swarmclique._kernel` (the compiled
extension). The two kernels draw from identical SplitMix64 streams and
perform float arithmetic in the same order, so for a given (graph, tau,
alpha, seed, iteration) they return byte-identical cliques. Any change
here must be mirrored in ``_kernel.pyx``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .graph import Graph
from .rng import ANT_STREAM, SplitMix64, stream_seed


class PurePrep(NamedTuple):
    n: int
    masks: list[int]                       # adjacency bitmask per vertex
    inc: list[list[tuple[int, int]]]       # (neighbor, edge id), ascending


def prepare(g: Graph) -> PurePrep:
    return PurePrep(g.n, g._adj, g._inc)


def construct(prep: PurePrep, tau: list[float], alpha: float,
              rng: SplitMix64) -> list[int]:
    """Build one maximal clique: uniform start vertex, then repeated
    trail-weighted extension until no candidate remains.

    A candidate's weight is (sum of trails into the clique) ** alpha;
    integer alpha uses an explicit multiply loop so the compiled kernel
    can reproduce the exact same rounding.
    """
    n, masks, inc = prep
    v0 = rng.randbelow(n)
    members = [v0]
    cand = masks[v0]
    score = {}
    for w, eid in inc[v0]:
        score[w] = tau[eid]
    alpha_int = int(alpha)
    integral = alpha == alpha_int and 0 <= alpha_int <= 64
    while cand:
        verts = []
        weights = []
        total = 0.0
        mask = cand
        while mask:
            lsb = mask & -mask
            v = lsb.bit_length() - 1
            mask ^= lsb
            s = score[v]
            if integral:
                w = 1.0
                for _ in range(alpha_int):
                    w *= s
            else:
                w = math.pow(s, alpha)
            verts.append(v)
            weights.append(w)
            total += w
        threshold = rng.random() * total
        chosen = verts[-1]
        acc = 0.0
        for i, w in enumerate(weights):
            acc += w
            if acc > threshold:
                chosen = verts[i]
                break
        members.append(chosen)
        cand &= masks[chosen]
        for w_, eid in inc[chosen]:
            if (cand >> w_) & 1:
                score[w_] += tau[eid]
    return members


def run_iteration(prep: PurePrep, tau, alpha: float, ants: int,
                  seed: int, t: int) -> list[list[int]]:
    """Cliques built by ``ants`` independent ants at iteration ``t``.

    Each ant draws from its own substream keyed by (seed, t, ant index),
    so results do not depend on the order ants execute in.
    """
    tau_list = tau.tolist() if hasattr(tau, "tolist") else list(tau)
    out = []
    for k in range(ants):
        rng = SplitMix64(stream_seed(seed, ANT_STREAM, t, k))
        out.append(construct(prep, tau_list, alpha, rng))
    return out
