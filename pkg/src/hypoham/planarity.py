"""Planarity testing, plane embeddings with face traversal, girth, and a
crossing-number-at-most-one decision procedure.

The planarity test itself is delegated to networkx's left-right algorithm;
everything downstream of the rotation system (faces, Euler validation,
profiles) is computed here and cross-checked by tests against independent
counts.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graph import Graph, GraphError


class EmbeddingError(ValueError):
    """A rotation system that does not describe a sphere embedding."""


def _to_nx(g: Graph) -> nx.Graph:
    gx = nx.Graph()
    gx.add_nodes_from(range(g.n))
    gx.add_edges_from(g.edges())
    return gx


@dataclass(frozen=True)
class FaceProfile:
    """Histogram of face sizes of a plane embedding."""

    counts: tuple[tuple[int, int], ...]  # (size, multiplicity), ascending

    @staticmethod
    def from_sizes(sizes: list[int]) -> "FaceProfile":
        c = Counter(sizes)
        return FaceProfile(tuple(sorted(c.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def face_count(self) -> int:
        return sum(m for _, m in self.counts)

    def incidence_sum(self) -> int:
        return sum(s * m for s, m in self.counts)

    def __str__(self) -> str:
        return ", ".join(f"{m} face(s) of size {s}" for s, m in self.counts)


class PlanarEmbedding:
    """A combinatorial sphere embedding: one clockwise neighbor rotation per
    vertex, with faces derived by trace and validated against Euler's formula.

    Only connected graphs are accepted; a disconnected rotation system has no
    well-defined single sphere embedding.
    """

    def __init__(self, graph: Graph, rotations: list[list[int]],
                 outer_face: int = 0):
        if len(rotations) != graph.n:
            raise EmbeddingError("one rotation per vertex required")
        for v, rot in enumerate(rotations):
            if sorted(rot) != sorted(graph.neighbors(v)):
                raise EmbeddingError(
                    f"rotation of vertex {v} is not a permutation of its neighbors")
        if not graph.is_connected():
            raise EmbeddingError("embeddings are defined for connected graphs only")
        self.graph = graph
        self.rotations = [list(r) for r in rotations]
        self._succ = [
            {u: rot[(i + 1) % len(rot)] for i, u in enumerate(rot)}
            for rot in self.rotations
        ]
        self.faces = self._trace_faces()
        f = len(self.faces)
        if graph.n - graph.m + f != 2:
            raise EmbeddingError(
                f"rotation system is not planar: V-E+F = "
                f"{graph.n}-{graph.m}+{f} != 2")
        if not 0 <= outer_face < f:
            raise EmbeddingError(f"outer face index {outer_face} out of range")
        self.outer_face = outer_face

    def _trace_faces(self) -> list[tuple[int, ...]]:
        # Face to the left of directed edge (u, v): successor of (u, v) is
        # (v, w) with w the rotation successor of u at v.
        if self.graph.m == 0:
            # A lone vertex on the sphere bounds a single face with an empty
            # boundary walk; the dart trace below cannot see it.
            return [()]
        seen: set[tuple[int, int]] = set()
        faces: list[tuple[int, ...]] = []
        for u0 in range(self.graph.n):
            for v0 in self.rotations[u0]:
                if (u0, v0) in seen:
                    continue
                walk = []
                u, v = u0, v0
                while (u, v) not in seen:
                    seen.add((u, v))
                    walk.append(u)
                    u, v = v, self._succ[v][u]
                if (u, v) != (u0, v0):
                    raise EmbeddingError("face trace did not close")
                faces.append(tuple(walk))
        return faces

    def face_sizes(self) -> list[int]:
        return [len(f) for f in self.faces]

    def face_profile(self) -> FaceProfile:
        return FaceProfile.from_sizes(self.face_sizes())

    def with_outer_face(self, index: int) -> "PlanarEmbedding":
        return PlanarEmbedding(self.graph, self.rotations, outer_face=index)

    def edge_faces(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map each undirected edge to the indices of its (two) incident faces."""
        out: dict[tuple[int, int], list[int]] = {e: [] for e in self.graph.edges()}
        for idx, face in enumerate(self.faces):
            k = len(face)
            for i in range(k):
                u, v = face[i], face[(i + 1) % k]
                key = (u, v) if u < v else (v, u)
                out[key].append(idx)
        for e, fs in out.items():
            if len(fs) != 2:
                raise EmbeddingError(f"edge {e} lies on {len(fs)} faces, expected 2")
        return {e: tuple(fs) for e, fs in out.items()}

    def corner_faces(self) -> list[list[int]]:
        """For each vertex, the incident face indices in rotation order.

        Corner i of vertex v sits between rotation neighbors i and i+1; it is
        the face containing the directed edge (v, rotations[v][i+1]).
        """
        directed: dict[tuple[int, int], int] = {}
        for idx, face in enumerate(self.faces):
            k = len(face)
            for i in range(k):
                directed[(face[i], face[(i + 1) % k])] = idx
        out: list[list[int]] = []
        for v, rot in enumerate(self.rotations):
            out.append([directed[(v, w)] for w in rot])
        return out

    def __repr__(self) -> str:
        return (f"PlanarEmbedding(n={self.graph.n}, m={self.graph.m}, "
                f"faces={len(self.faces)})")


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: Optional[PlanarEmbedding]
    obstruction: Optional[tuple[tuple[int, int], ...]]  # Kuratowski subgraph edges

    def obstruction_vertices(self) -> frozenset[int]:
        if self.obstruction is None:
            raise GraphError("planar graph has no obstruction")
        return frozenset(v for e in self.obstruction for v in e)


def check_planarity(g: Graph) -> PlanarityResult:
    """Decide planarity; on success return a validated embedding, otherwise
    the edge set of a K5 or K3,3 subdivision."""
    if g.n == 0:
        raise GraphError("planarity of the empty graph is not defined here")
    if not g.is_connected():
        # Embed component-wise and reject only if some component is nonplanar;
        # no single embedding object is produced for disconnected input.
        for verts in g.components():
            sub = g.delete_vertices([v for v in range(g.n) if v not in verts])
            res = check_planarity(sub)
            if not res.planar:
                back = {i: verts[i] for i in range(len(verts))}
                obs = tuple(sorted((min(back[a], back[b]), max(back[a], back[b]))
                                   for a, b in res.obstruction))
                return PlanarityResult(False, None, obs)
        return PlanarityResult(True, None, None)
    ok, cert = nx.check_planarity(_to_nx(g), counterexample=True)
    if not ok:
        obs = tuple(sorted((min(u, v), max(u, v)) for u, v in cert.edges()))
        return PlanarityResult(False, None, obs)
    data = cert.get_data()  # clockwise neighbor order per vertex
    rotations = [data[v] for v in range(g.n)]
    emb = PlanarEmbedding(g, rotations)
    return PlanarityResult(True, emb, None)


def is_planar(g: Graph) -> bool:
    return check_planarity(g).planar


def embedding_for(g: Graph) -> PlanarEmbedding:
    res = check_planarity(g)
    if not res.planar:
        raise GraphError("graph is not planar")
    if res.embedding is None:
        raise GraphError("no embedding for disconnected graph")
    return res.embedding


def girth(g: Graph) -> int:
    """Length of a shortest cycle. Raises GraphError on forests."""
    best = None
    n = g.n
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if best is not None and dist[u] * 2 >= best:
                break
            for v in g.neighbors(u):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif v != parent[u]:
                    # non-tree edge closes a cycle through s of this length
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    if best is None:
        raise GraphError("graph has no cycle")
    return best


def crossing_number_at_most_one(
    g: Graph,
    hint_edge: Optional[tuple[int, int]] = None,
) -> tuple[int, Optional[tuple[tuple[int, int], tuple[int, int]]]]:
    """Return (0, None) if planar, (1, (e1, e2)) if one crossing of the
    independent edge pair e1, e2 suffices, and (2, None) meaning "at least 2".

    A drawing with one crossing is equivalent to planarity of the graph in
    which two independent edges are replaced by paths through a new shared
    vertex, so all such pairs are tried. `hint_edge` only reorders the
    enumeration: pairs containing it are tried first, which pays off when the
    graph is a one-edge augmentation of a planar graph.
    """
    if is_planar(g):
        return 0, None
    edges = g.edges()
    if hint_edge is not None:
        e = (min(hint_edge), max(hint_edge))
        if e in edges:
            edges = [e] + [f for f in edges if f != e]
    for i, (a, b) in enumerate(edges):
        for (c, d) in edges[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue  # adjacent edges never need to cross
            h = g.delete_edge(a, b).delete_edge(c, d)
            h = h.add_vertex(neighbors=(a, b, c, d))
            if is_planar(h):
                return 1, ((a, b), (c, d))
    return 2, None
