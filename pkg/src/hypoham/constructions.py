"""Order-raising constructions on (planar) hypohamiltonian graphs and the
composition that produces hypotraceable graphs.

All operations are pure graph surgery with checked pre/postconditions; the
hypohamiltonicity of the results is *verified* elsewhere (classification),
never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError
from .planarity import is_planar


class ConstructionError(GraphError):
    pass


def _check_four_cycle(g: Graph, quad: Sequence[int]) -> tuple[int, int, int, int]:
    if len(quad) != 4 or len(set(quad)) != 4:
        raise ConstructionError(f"{tuple(quad)} is not four distinct vertices")
    v1, v2, v3, v4 = quad
    for a, b in ((v1, v2), (v2, v3), (v3, v4), (v4, v1)):
        if not g.has_edge(a, b):
            raise ConstructionError(
                f"{tuple(quad)} is not a 4-cycle: edge ({a}, {b}) missing")
    return v1, v2, v3, v4


def has_cubic_vertex(g: Graph, quad: Sequence[int]) -> bool:
    return any(g.degree(v) == 3 for v in quad)


def th(g: Graph, quad: Sequence[int], keep_edges: bool = False) -> Graph:
    """Expand the 4-cycle `quad` = (v1, v2, v3, v4): add a new 4-cycle
    v1'v2'v3'v4' plus the matching vivi', deleting the opposite edges v1v2 and
    v3v4 unless `keep_edges`.

    Order grows by 4; size by 6 (8 with keep_edges). The new vertices are
    appended at indices n..n+3 in cycle order, all cubic, so the operation
    iterates on tuple(range(n, n+4)) of the result. Hypohamiltonicity is
    preserved when the expanded cycle carries a cubic vertex; that is the
    caller's (verified) concern, not a precondition here.
    """
    v1, v2, v3, v4 = _check_four_cycle(g, quad)
    n, m = g.n, g.m
    base = g if keep_edges else g.delete_edge(v1, v2).delete_edge(v3, v4)
    out = base
    fresh: list[int] = []
    for v in (v1, v2, v3, v4):
        out = out.add_vertex(neighbors=(v,))
        fresh.append(out.n - 1)
    p1, p2, p3, p4 = fresh
    for a, b in ((p1, p2), (p2, p3), (p3, p4), (p4, p1)):
        out = out.add_edge(a, b)
    assert out.n == n + 4
    assert out.m == m + (8 if keep_edges else 6)
    assert all(out.degree(p) == 3 for p in fresh)
    return out


def th_new_cycle(g_before: Graph) -> tuple[int, int, int, int]:
    """Indices of the 4-cycle th() appends, given the pre-expansion graph."""
    n = g_before.n
    return (n, n + 1, n + 2, n + 3)


def insert(g: Graph, w: int, host: Graph) -> Graph:
    """Replace every vertex of the cubic graph `host` by a copy of g - w,
    where w is a cubic vertex of g; each host edge becomes one edge between
    the corresponding former neighbors of w.

    The three neighbor slots of each copy are matched to the three host edges
    in index order on both sides, so the result is deterministic. Order of the
    result: |V(host)| * (|V(g)| - 1).
    """
    if g.degree(w) != 3:
        raise ConstructionError(f"vertex {w} of g has degree {g.degree(w)}, need 3")
    if host.n < 2 or any(host.degree(h) != 3 for h in range(host.n)):
        raise ConstructionError("host must be cubic")
    slots_src = sorted(g.neighbors(w))
    block = g.delete_vertex(w)
    shift = lambda x: x if x < w else x - 1  # noqa: E731
    slots = [shift(x) for x in slots_src]
    nb = block.n
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    for h in range(host.n):
        off = h * nb
        labels.extend(f"{h}:{lab}" for lab in block.labels)
        edges.extend((off + a, off + b) for a, b in block.edges())
    for h1, h2 in host.edges():
        i1 = sorted(host.neighbors(h1)).index(h2)
        i2 = sorted(host.neighbors(h2)).index(h1)
        edges.append((h1 * nb + slots[i1], h2 * nb + slots[i2]))
    out = Graph.from_edges(host.n * nb, edges, labels)
    assert out.n == host.n * (g.n - 1)
    return out


@dataclass(frozen=True)
class CombinePattern:
    """Wiring recipe for the four-block composition.

    `identified[i]` picks which of block i's three stubs (in index order) is
    merged: blocks 0 and 1 share their identified stub, and so do blocks 2
    and 3. `cross` lists four (block, stub_choice, block, stub_choice) edges
    over the remaining two stubs per block (stub_choice indexes the two
    leftovers in order).
    """

    identified: tuple[int, int, int, int]
    cross: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self) -> None:
        if len(self.cross) != 4:
            raise ConstructionError("pattern needs exactly four cross edges")
        use: dict[tuple[int, int], int] = {}
        for bi, si, bj, sj in self.cross:
            for b, s in ((bi, si), (bj, sj)):
                if not (0 <= b < 4 and 0 <= s < 2):
                    raise ConstructionError(f"bad stub reference ({b}, {s})")
                use[(b, s)] = use.get((b, s), 0) + 1
            if bi == bj:
                raise ConstructionError("cross edges join distinct blocks")
        if sorted(use) != [(b, s) for b in range(4) for s in range(2)] or \
                any(c != 1 for c in use.values()):
            raise ConstructionError("each free stub is used exactly once")


# Wiring validated against four Petersen blocks: the result is hypotraceable
# (exhaustively checked in the tests). Blocks 0, 1 hang off one merged vertex,
# blocks 2, 3 off the other; block 0 sends both free stubs to block 2 and
# block 1 both of its stubs to block 3.
DEFAULT_COMBINE_PATTERN = CombinePattern(
    identified=(0, 0, 0, 0),
    cross=((0, 0, 2, 0), (0, 1, 2, 1), (1, 0, 3, 0), (1, 1, 3, 1)),
)


def combine_four(blocks: Sequence[Graph], cut_vertices: Sequence[int],
                 pattern: CombinePattern = DEFAULT_COMBINE_PATTERN,
                 require_planar: bool = False) -> Graph:
    """Compose four graphs with chosen cubic vertices w_i into one graph on
    sum(|V_i|) - 6 vertices: delete each w_i, merge one former neighbor of w_1
    with one of w_2 (and likewise for w_3, w_4), and join the remaining eight
    stubs by four cross edges per `pattern`.

    With hypohamiltonian blocks this is the classical route to hypotraceable
    graphs; the hypotraceability of the output is established by
    classification, not assumed. When `require_planar` is set, all wiring
    patterns are searched for one whose result is planar.
    """
    if len(blocks) != 4 or len(cut_vertices) != 4:
        raise ConstructionError("need exactly four blocks and four cut vertices")
    for g, w in zip(blocks, cut_vertices):
        if g.degree(w) != 3:
            raise ConstructionError(
                f"cut vertex {w} has degree {g.degree(w)}, need 3")
    if require_planar:
        for pat in _all_patterns():
            out = combine_four(blocks, cut_vertices, pat, require_planar=False)
            if is_planar(out):
                return out
        raise ConstructionError("no wiring pattern yields a planar composition")
    return _combine(blocks, cut_vertices, pattern)


def _combine(blocks: Sequence[Graph], cut_vertices: Sequence[int],
             pattern: CombinePattern) -> Graph:
    pieces: list[Graph] = []
    stubs: list[list[int]] = []  # global indices of the 3 stubs per block
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    off = 0
    for bi, (g, w) in enumerate(zip(blocks, cut_vertices)):
        nbrs = sorted(g.neighbors(w))
        piece = g.delete_vertex(w)
        shift = [x if x < w else x - 1 for x in nbrs]
        pieces.append(piece)
        stubs.append([off + s for s in shift])
        labels.extend(f"b{bi}:{lab}" for lab in piece.labels)
        edges.extend((off + a, off + b) for a, b in piece.edges())
        off += piece.n
    ident = [stubs[b][pattern.identified[b]] for b in range(4)]
    free: list[list[int]] = []
    for b in range(4):
        rest = [s for i, s in enumerate(stubs[b]) if i != pattern.identified[b]]
        free.append(rest)
    for bi, si, bj, sj in pattern.cross:
        edges.append((free[bi][si], free[bj][sj]))
    g_all = Graph.from_edges(off, edges, labels)
    # identification: temporary edges contracted away
    g_all = g_all.add_edge(ident[0], ident[1]).add_edge(ident[2], ident[3])
    out = g_all.contract_edges([(ident[0], ident[1]), (ident[2], ident[3])])
    expect = sum(g.n for g in blocks) - 6
    assert out.n == expect, f"composition order {out.n}, expected {expect}"
    return out


def _matchings(items: list[tuple[int, int]]) -> Iterable[list[tuple[tuple[int, int], tuple[int, int]]]]:
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        other = items[i]
        rest = items[1:i] + items[i + 1:]
        for m in _matchings(rest):
            yield [(first, other)] + m


def _all_patterns() -> Iterable[CombinePattern]:
    """Every wiring: identified-stub choices (3^4) x perfect matchings of the
    eight free stubs that never pair two stubs of the same block (60)."""
    stubs = [(b, s) for b in range(4) for s in range(2)]
    crossings = []
    for m in _matchings(stubs):
        if any(x[0] == y[0] for x, y in m):
            continue
        crossings.append(tuple((x[0], x[1], y[0], y[1]) for x, y in m))
    for i0 in range(3):
        for i1 in range(3):
            for i2 in range(3):
                for i3 in range(3):
                    for cross in crossings:
                        yield CombinePattern((i0, i1, i2, i3), cross)


def build_order(n: int, bases: dict[int, tuple[Graph, tuple[int, int, int, int], bool]]
                ) -> Graph:
    """Planar hypohamiltonian graph of order n >= 40 by iterated th expansion.

    `bases` maps a base order (40..43) to (graph, expansion 4-cycle,
    keep_edges flag for the first step). The base with n's residue mod 4 is
    expanded (n - base)/4 times; after the first step the expansion continues
    on the freshly appended all-cubic 4-cycle with the classical
    edge-deleting variant.
    """
    if n < 40:
        raise ConstructionError("build_order covers n >= 40")
    wanted = 40 + (n - 40) % 4
    if wanted not in bases:
        raise ConstructionError(
            f"no base of order {wanted} available for n = {n}")
    g, quad, keep = bases[wanted]
    if g.n != wanted:
        raise ConstructionError(
            f"registered base for order {wanted} has order {g.n}")
    steps = (n - wanted) // 4
    for _ in range(steps):
        before = g
        g = th(g, quad, keep_edges=keep)
        quad = th_new_cycle(before)
        keep = False
    assert g.n == n
    return g


@dataclass(frozen=True)
class SharedSubgraphMap:
    """Two injections of a common subgraph H into g1 and g2, by label."""

    into_first: dict[str, str]
    into_second: dict[str, str]

    def validate(self, h: Graph, g1: Graph, g2: Graph) -> None:
        for name, mp, g in (("first", self.into_first, g1),
                            ("second", self.into_second, g2)):
            if sorted(mp) != sorted(h.labels):
                raise ConstructionError(
                    f"map into {name} graph must cover exactly V(H)")
            if len(set(mp.values())) != len(mp):
                raise ConstructionError(f"map into {name} graph is not injective")
            for lab in mp.values():
                g.index_of(lab)  # raises on unknown label
            for a, b in h.edges():
                ia = g.index_of(mp[h.labels[a]])
                ib = g.index_of(mp[h.labels[b]])
                if not g.has_edge(ia, ib):
                    raise ConstructionError(
                        f"map into {name} graph sends edge "
                        f"({h.labels[a]}, {h.labels[b]}) to a non-edge")


def h_equivalent(g1: Graph, g2: Graph, h: Graph, maps: SharedSubgraphMap) -> bool:
    """True when g1 and g2 carry H (via the validated maps) and agree in the
    number of vertices and edges outside H."""
    maps.validate(h, g1, g2)
    return (g1.n - h.n == g2.n - h.n) and (g1.m - h.m == g2.m - h.m)


def h_strictly_bigger(g1: Graph, g2: Graph, h: Graph,
                      maps: SharedSubgraphMap) -> bool:
    """True when g1 exceeds g2 in both vertex and edge count outside H."""
    maps.validate(h, g1, g2)
    return (g1.n - h.n > g2.n - h.n) and (g1.m - h.m > g2.m - h.m)
