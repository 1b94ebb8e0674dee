"""Canonical labeling, automorphism groups, and isomorphism testing.

The canonical form uses iterated color refinement plus individualization
backtracking; the full automorphism group is enumerated first (the graphs
handled here have small groups) and its orbits prune the canonical search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError


class SymmetryError(GraphError):
    pass


def refine_colors(g: Graph, colors: Sequence[int]) -> tuple[int, ...]:
    """Run color refinement to a stable partition, returning canonical color
    ids (colors are ranks of sorted signatures, so they are label-independent
    given label-independent input colors)."""
    cur = tuple(colors)
    n = g.n
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(cur[u] for u in g.neighbors(v))
            sigs.append((cur[v], tuple(nbr)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        nxt = tuple(order[s] for s in sigs)
        if nxt == cur:
            return cur
        cur = nxt


def _cells(colors: tuple[int, ...]) -> list[list[int]]:
    by: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by.setdefault(c, []).append(v)
    return [by[c] for c in sorted(by)]


def automorphisms(g: Graph, limit: int = 200_000) -> list[tuple[int, ...]]:
    """Enumerate the full automorphism group as vertex permutations.

    Raises SymmetryError if the group exceeds `limit` elements; the graphs in
    scope (planar, near-cubic) have tiny groups.
    """
    n = g.n
    if n == 0:
        return [()]
    base = refine_colors(g, (0,) * n)
    # Map vertices in an order that keeps each new vertex anchored to already
    # mapped ones where possible, so adjacency constraints bite early.
    order: list[int] = []
    seen = [False] * n
    start = min(range(n), key=lambda v: (base[v], v))
    stack = [start]
    while len(order) < n:
        if not stack:
            rest = [v for v in range(n) if not seen[v]]
            stack.append(min(rest, key=lambda v: (base[v], v)))
        v = stack.pop()
        if seen[v]:
            continue
        seen[v] = True
        order.append(v)
        for u in sorted(g.neighbors(v), reverse=True):
            if not seen[u]:
                stack.append(u)

    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(depth: int) -> None:
        if len(found) > limit:
            raise SymmetryError(f"automorphism group larger than {limit}")
        if depth == n:
            found.append(tuple(image))
            return
        v = order[depth]
        vmask_nbrs = [u for u in order[:depth] if g.has_edge(v, u)]
        non_nbrs = [u for u in order[:depth] if not g.has_edge(v, u)]
        for t in range(n):
            if used[t] or base[t] != base[v]:
                continue
            if any(not g.has_edge(t, image[u]) for u in vmask_nbrs):
                continue
            if any(g.has_edge(t, image[u]) for u in non_nbrs):
                continue
            image[v] = t
            used[t] = True
            extend(depth + 1)
            used[t] = False
            image[v] = -1

    extend(0)
    return found


def automorphism_group_order(g: Graph, limit: int = 200_000) -> int:
    return len(automorphisms(g, limit=limit))


def orbits(g: Graph, perms: Optional[list[tuple[int, ...]]] = None) -> list[list[int]]:
    """Vertex orbits under the automorphism group."""
    if perms is None:
        perms = automorphisms(g)
    n = g.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[b] = a
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return [sorted(vs) for vs in sorted(groups.values())]


@dataclass(frozen=True)
class CanonicalForm:
    """A canonical relabeling: ordering[i] is the original vertex placed at
    position i. `key` is the canonical adjacency encoding (graph6 bytes of the
    relabeled graph), equal for two graphs iff they are isomorphic."""

    ordering: tuple[int, ...]
    key: bytes
    group_order: int

    def canonical_graph(self, g: Graph) -> Graph:
        perm = [0] * len(self.ordering)
        for pos, v in enumerate(self.ordering):
            perm[v] = pos
        return g.permuted(tuple(perm))


def _adjacency_key(g: Graph, ordering: Sequence[int]) -> bytes:
    n = g.n
    pos = [0] * n
    for i, v in enumerate(ordering):
        pos[v] = i
    rows = [0] * n
    for v in range(n):
        for u in g.neighbors(v):
            rows[pos[v]] |= 1 << pos[u]
    out = bytearray()
    for j in range(1, n):
        for i in range(j):
            out.append(1 if (rows[i] >> j) & 1 else 0)
    return bytes(out)


def _twin_transpositions(g: Graph) -> list[tuple[int, ...]]:
    """Transpositions of twin vertices (equal neighborhoods, the mutual edge
    set aside). Always automorphisms; they serve as pruning generators when
    the full group is too large to enumerate."""
    n = g.n
    ident = list(range(n))
    perms: list[tuple[int, ...]] = []
    for u in range(n):
        for v in range(u + 1, n):
            if g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                p = ident[:]
                p[u], p[v] = v, u
                perms.append(tuple(p))
    return perms


def _twin_group_lower_bound(g: Graph) -> int:
    """Product of factorials over classes of vertices with identical
    neighborhoods; a cheap lower bound on the automorphism group order."""
    open_classes: dict[int, int] = {}
    closed_classes: dict[int, int] = {}
    for v in range(g.n):
        open_classes[g.adj[v]] = open_classes.get(g.adj[v], 0) + 1
        closed = g.adj[v] | (1 << v)
        closed_classes[closed] = closed_classes.get(closed, 0) + 1
    bound = 1
    for classes in (open_classes, closed_classes):
        prod = 1
        for k in classes.values():
            prod *= math.factorial(k)
        bound = max(bound, prod)
    return bound


def _degenerate_group_order(g: Graph) -> int:
    """Exact group order for the shapes whose groups are factorially large:
    empty and complete graphs, and graphs with isolated vertices (isolated
    vertices only ever map to isolated vertices)."""
    n = g.n
    if g.m == 0 or g.m == n * (n - 1) // 2:
        return math.factorial(n)
    isolated = [v for v in range(n) if g.degree(v) == 0]
    if isolated:
        core = g.delete_vertices(isolated)
        return math.factorial(len(isolated)) * automorphism_group_order(core)
    raise SymmetryError(
        "automorphism group too large to enumerate; the graphs in scope "
        "(planar, near-cubic) have small groups")


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form by individualization-refinement search for the lex-min
    adjacency string, pruned by automorphism orbits.

    Graphs whose group is too large to enumerate are still handled when the
    size comes from twin vertices (empty graphs, isolated vertices, complete
    graphs); twin transpositions then stand in as pruning generators."""
    from .formats import emit_graph6

    n = g.n
    if n == 0:
        raise SymmetryError("canonical form of the empty graph is not defined")
    if _twin_group_lower_bound(g) > 200_000:
        order = _degenerate_group_order(g)
        group = _twin_transpositions(g)
    else:
        try:
            group = automorphisms(g)
            order = len(group)
        except SymmetryError:
            order = _degenerate_group_order(g)
            group = _twin_transpositions(g)
    best: dict[str, object] = {"key": None, "ordering": None}

    def search(colors: tuple[int, ...], stab: list[tuple[int, ...]]) -> None:
        cells = _cells(colors)
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            ordering = [v for c in cells for v in c]
            key = _adjacency_key(g, ordering)
            if best["key"] is None or key < best["key"]:  # type: ignore[operator]
                best["key"] = key
                best["ordering"] = tuple(ordering)
            return
        # branch over one representative per orbit of the pointwise stabilizer
        # (stab is a full subgroup, so {p[v] : p in stab} is the whole orbit)
        reps: list[int] = []
        seen: set[int] = set()
        for v in target:
            if v in seen:
                continue
            reps.append(v)
            for p in stab:
                seen.add(p[v])
            seen.add(v)
        for v in reps:
            # individualize v: fresh color strictly below the rest of its cell
            ind = tuple((colors[u] * 2 if u != v else colors[u] * 2 - 1)
                        for u in range(n))
            refined = refine_colors(g, ind)
            sub = [p for p in stab if p[v] == v]
            search(refined, sub)

    search(refine_colors(g, (0,) * n), group)
    ordering: tuple[int, ...] = best["ordering"]  # type: ignore[assignment]
    assert ordering is not None
    perm = [0] * n
    for pos, v in enumerate(ordering):
        perm[v] = pos
    cg = g.permuted(tuple(perm))
    return CanonicalForm(ordering=ordering, key=emit_graph6(cg),
                         group_order=order)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1).key == canonical_form(g2).key


def pairwise_distinct(graphs: Sequence[Graph]) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check that no two graphs in the list are isomorphic; on failure return
    the first offending index pair."""
    keys: dict[bytes, int] = {}
    for i, g in enumerate(graphs):
        k = canonical_form(g).key
        if k in keys:
            return False, (keys[k], i)
        keys[k] = i
    return True, None
