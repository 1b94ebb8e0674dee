"""Immutable simple undirected graphs with stable vertex labels.

Adjacency is stored as one Python int bitmask per vertex, which gives O(1)
membership tests and cheap set algebra in the search loops. All mutating
operations return a new Graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """Invalid graph construction or operation."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DegreeCensus:
    """Per-degree vertex counts of a graph."""

    counts: dict[int, int]

    @property
    def cubic_count(self) -> int:
        return self.counts.get(3, 0)

    @property
    def order(self) -> int:
        return sum(self.counts.values())

    def degree_sum(self) -> int:
        return sum(d * c for d, c in self.counts.items())


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with unique string labels."""

    labels: tuple[str, ...]
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match label count")
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels must be unique")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row >> n:
                raise GraphError(f"adjacency of vertex {v} references out-of-range vertices")
            if row & (1 << v):
                raise GraphError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphError("adjacency bits out of range")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] & (1 << v):
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        """Build a graph on ``n`` vertices from an iterable of index pairs."""
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphError("label count does not match vertex count")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(labels, tuple(adj))

    @staticmethod
    def from_adjacency(adjacency: Mapping[int, Iterable[int]] | Sequence[Iterable[int]],
                       labels: Sequence[str] | None = None) -> "Graph":
        """Build a graph from an adjacency mapping/list over 0..n-1."""
        if isinstance(adjacency, Mapping):
            n = len(adjacency)
            items = [(v, adjacency[v]) for v in range(n)]
        else:
            n = len(adjacency)
            items = list(enumerate(adjacency))
        edges = [(v, u) for v, nbrs in items for u in nbrs]
        return Graph.from_edges(n, edges, labels)

    # -- basic statistics ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def degree_census(self) -> DegreeCensus:
        counts: dict[int, int] = {}
        for row in self.adj:
            d = row.bit_count()
            counts[d] = counts.get(d, 0) + 1
        return DegreeCensus(counts)

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for u in bits(row):
                out.append((v, u + v + 1))
        return out

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    # -- mutation by copy ---------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError("self-loops are not allowed")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.labels, tuple(adj))

    def delete_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.labels, tuple(adj))

    def add_vertex(self, label: str | None = None,
                   neighbors: Iterable[int] = ()) -> "Graph":
        if label is None:
            label = self._fresh_label()
        if label in self.labels:
            raise GraphError(f"duplicate label {label!r}")
        n = self.n
        mask = 0
        adj = list(self.adj)
        for u in neighbors:
            self._check_vertex(u)
            mask |= 1 << u
            adj[u] |= 1 << n
        adj.append(mask)
        return Graph(self.labels + (label,), tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        """Delete vertex ``v``; surviving vertices keep their labels."""
        self._check_vertex(v)
        keep = [u for u in range(self.n) if u != v]
        return self._induced(keep)

    def delete_vertices(self, vs: Iterable[int]) -> "Graph":
        drop = set(vs)
        for v in drop:
            self._check_vertex(v)
        keep = [u for u in range(self.n) if u not in drop]
        return self._induced(keep)

    def _induced(self, keep: Sequence[int]) -> "Graph":
        pos = {old: new for new, old in enumerate(keep)}
        labels = tuple(self.labels[old] for old in keep)
        adj = []
        for old in keep:
            mask = 0
            row = self.adj[old]
            for u in bits(row):
                if u in pos:
                    mask |= 1 << pos[u]
            adj.append(mask)
        return Graph(labels, tuple(adj))

    def contract_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Contract each edge, merging endpoints; simplifies loops/multi-edges.

        The surviving representative of each merged class is its
        lowest-index vertex and keeps that vertex's label.
        """
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            self._check_vertex(u)
            self._check_vertex(v)
            if not self.has_edge(u, v):
                raise GraphError(f"edge ({u}, {v}) not present")
            ru, rv = find(u), find(v)
            if ru != rv:
                # keep the smaller root as representative
                if ru > rv:
                    ru, rv = rv, ru
                parent[rv] = ru

        reps = sorted({find(v) for v in range(self.n)})
        pos = {r: i for i, r in enumerate(reps)}
        labels = tuple(self.labels[r] for r in reps)
        adj = [0] * len(reps)
        for v in range(self.n):
            rv = pos[find(v)]
            for u in bits(self.adj[v]):
                ru = pos[find(u)]
                if ru != rv:
                    adj[rv] |= 1 << ru
                    adj[ru] |= 1 << rv
        return Graph(labels, tuple(adj))

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        labels = tuple(mapping.get(l, l) for l in self.labels)
        return Graph(labels, self.adj)

    def permuted(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex i moved to position perm[i]."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("not a permutation")
        labels = [""] * n
        adj = [0] * n
        for v in range(n):
            labels[perm[v]] = self.labels[v]
            mask = 0
            for u in bits(self.adj[v]):
                mask |= 1 << perm[u]
            adj[perm[v]] = mask
        return Graph(tuple(labels), tuple(adj))

    # -- connectivity helpers -----------------------------------------------

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def components(self) -> list[list[int]]:
        remaining = (1 << self.n) - 1
        comps = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            seen = 1 << start
            frontier = seen
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & remaining & ~seen
                seen |= frontier
            comps.append(list(bits(seen)))
            remaining &= ~seen
        return comps

    def _fresh_label(self) -> str:
        i = self.n
        while str(i) in self.labels:
            i += 1
        return str(i)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
