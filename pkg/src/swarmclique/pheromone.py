"""Per-edge pheromone trails with MMAS-style clamp bounds.

Trails live on edges (indexed by the graph's edge ids), are symmetric by
construction, and are clamped into [tau_min, tau_max] after every update
so no edge ever starves to zero probability or runs away.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .graph import Graph, GraphError, is_clique

EVAPORATION_MODES = ("literal", "persistence")


class PheromoneState:
    """Trail levels for every edge of one graph.

    ``evaporate`` and ``reinforce`` mutate in place; the solver treats a
    state as owned by a single run.
    """

    def __init__(self, graph: Graph, tau: np.ndarray, tau_min: float, tau_max: float):
        if not 0.0 < tau_min < tau_max:
            raise ValueError(f"need 0 < tau_min < tau_max, got [{tau_min}, {tau_max}]")
        if tau.shape != (graph.m,):
            raise ValueError(f"tau has shape {tau.shape}, expected ({graph.m},)")
        self.graph = graph
        self.tau = tau.astype(np.float64, copy=True)
        self.tau_min = tau_min
        self.tau_max = tau_max
        np.clip(self.tau, tau_min, tau_max, out=self.tau)

    @classmethod
    def initial(cls, graph: Graph, tau_min: float, tau_max: float) -> "PheromoneState":
        """Fresh state with every trail at tau_max, so early iterations
        explore before reinforcement differentiates edges."""
        return cls(graph, np.full(graph.m, tau_max, dtype=np.float64),
                   tau_min, tau_max)

    def value(self, u: int, v: int) -> float:
        key = (u, v) if u < v else (v, u)
        eid = self.graph.edge_index.get(key)
        if eid is None:
            raise GraphError(f"no edge ({u},{v})")
        return float(self.tau[eid])

    def attachment(self, members: Iterable[int], v: int) -> float:
        """Trail score for attaching ``v`` to a partial clique: the sum of
        trails on edges from ``v`` into the clique."""
        return sum(self.value(u, v) for u in members)

    def evaporate(self, rho: float, mode: str = "literal") -> None:
        """Decay every trail, then clamp.

        ``literal`` keeps a (1 - rho) fraction of each trail; with the
        default rho = 0.95 that is an aggressive 5% carry-over.
        ``persistence`` reads rho as the kept fraction instead.
        """
        if not 0.0 < rho < 1.0:
            raise ValueError(f"evaporation parameter must be in (0, 1), got {rho}")
        if mode not in EVAPORATION_MODES:
            raise ValueError(f"unknown evaporation mode {mode!r}")
        factor = (1.0 - rho) if mode == "literal" else rho
        self.tau *= factor
        np.clip(self.tau, self.tau_min, self.tau_max, out=self.tau)

    def reinforce(self, clique: Iterable[int], delta: float) -> None:
        """Deposit ``delta`` on every edge inside ``clique``, clamped at
        tau_max. Other edges are untouched."""
        if delta < 0.0:
            raise ValueError(f"reinforcement must be non-negative, got {delta}")
        members = sorted(set(clique))
        if not is_clique(self.graph, members):
            raise GraphError(f"{tuple(members)} is not a clique")
        if delta == 0.0 or len(members) < 2:
            return
        index = self.graph.edge_index
        tau = self.tau
        tau_max = self.tau_max
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                eid = index[(u, v)]
                level = tau[eid] + delta
                tau[eid] = level if level < tau_max else tau_max

    def bounds_ok(self) -> bool:
        if self.tau.size == 0:
            return True
        return bool(self.tau.min() >= self.tau_min and self.tau.max() <= self.tau_max)
