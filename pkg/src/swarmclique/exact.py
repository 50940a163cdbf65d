"""Exact maximum-clique search for desk-scale graphs.

``max_clique_exact`` is a branch-and-bound over bitmask candidate sets
with a greedy-coloring upper bound; ``enumerate_maximal_cliques`` is
Bron-Kerbosch with pivoting. Both are deterministic: vertices are always
visited in index order, so identical inputs give identical results.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .graph import Clique, Graph, _bits


@dataclass
class OracleResult:
    best: Clique
    optimum_size: int
    explored_nodes: int
    elapsed: float
    completed: bool


class _BudgetExhausted(Exception):
    pass


def _color_sort(p_mask: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set: returns vertices grouped by
    color class together with their (1-based) color numbers. A vertex's
    color bounds the largest clique inside the candidates containing it."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    while p_mask:
        color += 1
        q = p_mask
        taken = 0
        while q:
            lsb = q & -q
            v = lsb.bit_length() - 1
            order.append(v)
            colors.append(color)
            taken |= lsb
            q &= ~adj[v]
            q ^= lsb
        p_mask &= ~taken
    return order, colors


class _Search:
    def __init__(self, adj: list[int], deadline: Optional[float],
                 node_limit: Optional[int]):
        self.adj = adj
        self.deadline = deadline
        self.node_limit = node_limit
        self.best_size = 0
        self.best_mask = 0
        self.nodes = 0

    def _charge(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _BudgetExhausted
        if (self.deadline is not None and self.nodes % 256 == 0
                and time.perf_counter() > self.deadline):
            raise _BudgetExhausted

    def expand(self, size: int, r_mask: int, p_mask: int) -> None:
        self._charge()
        order, colors = _color_sort(p_mask, self.adj)
        local = p_mask
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= self.best_size:
                return
            v = order[i]
            v_bit = 1 << v
            sub = local & self.adj[v]
            if sub:
                self.expand(size + 1, r_mask | v_bit, sub)
            elif size + 1 > self.best_size:
                self.best_size = size + 1
                self.best_mask = r_mask | v_bit
            local ^= v_bit


def max_clique_exact(g: Graph, time_limit: Optional[float] = None,
                     node_limit: Optional[int] = None) -> OracleResult:
    """Find a maximum clique, or the best clique found before the budget
    ran out (``completed=False``). Practical for a few hundred sparse
    vertices."""
    start = time.perf_counter()
    if g.n == 0:
        return OracleResult(Clique(()), 0, 0, 0.0, True)
    deadline = start + time_limit if time_limit is not None else None
    search = _Search(g._adj, deadline, node_limit)
    completed = True
    try:
        search.expand(0, 0, (1 << g.n) - 1)
    except _BudgetExhausted:
        completed = False
    members = tuple(_bits(search.best_mask))
    if not members:  # edgeless graph: any single vertex is maximum
        members = (0,)
    return OracleResult(
        best=Clique.of(g, members),
        optimum_size=len(members),
        explored_nodes=search.nodes,
        elapsed=time.perf_counter() - start,
        completed=completed,
    )


def enumerate_maximal_cliques(g: Graph, cap: Optional[int] = None
                              ) -> tuple[list[Clique], bool]:
    """All maximal cliques via Bron-Kerbosch with pivoting, in a
    deterministic discovery order. Stops after ``cap`` cliques and then
    reports ``truncated=True``. Exhaustive when the flag is False."""
    adj = g._adj
    found: list[Clique] = []
    truncated = False

    def bk(r_mask: int, p_mask: int, x_mask: int) -> None:
        nonlocal truncated
        if truncated:
            return
        if p_mask == 0 and x_mask == 0:
            if cap is not None and len(found) >= cap:
                truncated = True
                return
            found.append(Clique(tuple(_bits(r_mask))))
            return
        pivot, pivot_score = -1, -1
        for u in _bits(p_mask | x_mask):
            score = (p_mask & adj[u]).bit_count()
            if score > pivot_score:
                pivot, pivot_score = u, score
        for v in _bits(p_mask & ~adj[pivot]):
            v_bit = 1 << v
            bk(r_mask | v_bit, p_mask & adj[v], x_mask & adj[v])
            p_mask ^= v_bit
            x_mask |= v_bit

    bk(0, (1 << g.n) - 1 if g.n else 0, 0)
    return found, truncated
