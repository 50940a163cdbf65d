"""Undirected simple graphs with constant-time adjacency tests.

Vertices are dense 0-based integers; original file tokens survive only as
optional display labels. Adjacency is kept as one Python-int bitmask per
vertex, so membership tests and candidate-set intersections are single
``&`` operations. Graphs are immutable after construction and safe to
share across threads and worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .rng import SplitMix64


class GraphError(ValueError):
    """Invalid vertex, edge, or clique input."""


def _bits(mask: int) -> Iterator[int]:
    """Yield set-bit positions of ``mask`` in ascending order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


class Graph:
    """Immutable simple undirected graph.

    Self-loops are rejected; duplicate and reversed edge pairs collapse to
    one undirected edge. Edge ids are the positions of the sorted
    ``(u, v), u < v`` edge list and index pheromone trail arrays.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop ({u},{u}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        if labels is not None and len(labels) != n:
            raise GraphError(f"{len(labels)} labels for {n} vertices")

        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.labels = tuple(labels) if labels is not None else None

        masks = [0] * n
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            inc[u].append((v, eid))
            inc[v].append((u, eid))
        self._adj = masks
        self._inc = [sorted(pairs) for pairs in inc]
        self.edge_index = {e: i for i, e in enumerate(self.edges)}

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return [w for w, _ in self._inc[v]]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._inc[v])

    def adjacency_mask(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitmask (bit i set iff i ~ v)."""
        self._check_vertex(v)
        return self._adj[v]

    def label_of(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    # Derived structures (adjacency, kernel caches) are rebuilt on
    # unpickle so worker processes receive compact payloads.
    def __getstate__(self):
        return {"n": self.n, "edges": self.edges, "labels": self.labels}

    def __setstate__(self, state):
        self.__init__(state["n"], state["edges"], state["labels"])


@dataclass(frozen=True)
class Clique:
    """A vertex set certified pairwise-adjacent in its graph.

    Build with :meth:`of`, which verifies completeness rather than
    trusting the caller.
    """

    members: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, vertices: Iterable[int]) -> "Clique":
        members = tuple(sorted(set(vertices)))
        if not is_clique(g, members):
            raise GraphError(f"{members} is not a clique")
        return cls(members)

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every pair of distinct vertices is adjacent (vacuously
    true for at most one vertex)."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    for i, u in enumerate(vs):
        mask = g._adj[u]
        for v in vs[i + 1:]:
            if not (mask >> v) & 1:
                return False
    return True


def candidates(g: Graph, clique: Iterable[int]) -> set[int]:
    """Vertices outside ``clique`` adjacent to every one of its members.

    For an empty clique this is every vertex. The caller is responsible
    for ``clique`` actually being a clique of ``g``.
    """
    members = list(clique)
    if not members:
        return set(range(g.n))
    for v in members:
        g._check_vertex(v)
    mask = g._adj[members[0]]
    for v in members[1:]:
        mask &= g._adj[v]
    for v in members:
        mask &= ~(1 << v)
    return set(_bits(mask))


class GraphSummary(NamedTuple):
    n: int
    m: int
    min_degree: int
    max_degree: int
    mean_degree: float


def summarize(g: Graph) -> GraphSummary:
    """Vertex/edge counts and degree extremes (0s for the empty graph)."""
    if g.n == 0:
        return GraphSummary(0, 0, 0, 0, 0.0)
    degrees = [len(pairs) for pairs in g._inc]
    return GraphSummary(g.n, g.m, min(degrees), max(degrees),
                        2.0 * g.m / g.n)


def gnp_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with the package's own generator, so the same
    seed yields the same graph on every platform and backend."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = [(u, v)
             for u in range(n)
             for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)
