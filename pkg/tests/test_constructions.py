"""Expansion, insertion and composition operations.

The numeric postconditions here (order and size deltas, degrees of the
fresh vertices) are exactly the ones the operations promise; the deeper
preserved-property checks live in the acceptance tests where the big
witnesses are involved.
"""
from __future__ import annotations

import pytest

from hypoham.constructions import (
    CombinePattern, ConstructionError, DEFAULT_COMBINE_PATTERN,
    SharedSubgraphMap, build_order, combine_four, h_equivalent,
    h_strictly_bigger, insert, th, th_new_cycle,
)
from hypoham.graph import Graph
from hypoham.hamiltonicity import Budget, classify
from hypoham.named import complete, cube, cycle, petersen
from hypoham.planarity import is_planar


def cube_quad() -> tuple[int, int, int, int]:
    # 0-1-3-2 is a face of the cube in its binary labeling
    return (0, 1, 3, 2)


def test_th_deleting_variant():
    g = cube()
    out = th(g, cube_quad(), keep_edges=False)
    assert out.n == g.n + 4
    assert out.m == g.m + 6
    # the two opposite quad edges are gone
    assert not out.has_edge(0, 1)
    assert not out.has_edge(3, 2)
    assert out.has_edge(1, 3) and out.has_edge(2, 0)
    for v in range(g.n, g.n + 4):
        assert out.degree(v) == 3


def test_th_keeping_variant():
    g = cube()
    out = th(g, cube_quad(), keep_edges=True)
    assert out.n == g.n + 4
    assert out.m == g.m + 8
    assert out.has_edge(0, 1) and out.has_edge(3, 2)


def test_th_new_cycle():
    g = cube()
    out = th(g, cube_quad(), keep_edges=True)
    quad = th_new_cycle(g)
    assert quad == (8, 9, 10, 11)
    a, b, c, d = quad
    for u, v in [(a, b), (b, c), (c, d), (d, a)]:
        assert out.has_edge(u, v)
    # and the new quad supports another round
    again = th(out, quad, keep_edges=False)
    assert again.n == g.n + 8


def test_th_rejects_non_quad():
    g = cube()
    with pytest.raises(ConstructionError):
        th(g, (0, 1, 2, 3))  # 1-2 is not an edge of the cube
    with pytest.raises(ConstructionError):
        th(g, (0, 1, 3, 3))
    with pytest.raises(ConstructionError):
        th(g, (0, 1, 3, 99))


def test_th_preserves_planarity_on_faces():
    out = th(cube(), cube_quad(), keep_edges=False)
    assert is_planar(out)
    out = th(cube(), cube_quad(), keep_edges=True)
    assert is_planar(out)


def test_insert_order_identity():
    g = petersen()  # w = 0 is cubic
    host = complete(4)
    out = insert(g, 0, host)
    assert out.n == host.n * (g.n - 1)
    assert out.degree_census().counts == {3: out.n}


def test_insert_requires_cubic_w():
    g = complete(5)
    with pytest.raises(ConstructionError):
        insert(g, 0, complete(4))


def test_insert_requires_cubic_host():
    with pytest.raises(ConstructionError):
        insert(petersen(), 0, cycle(4))


def test_combine_four_order():
    blocks = [petersen()] * 4
    out = combine_four(blocks, [0, 0, 0, 0])
    assert out.n == 4 * petersen().n - 6
    assert out.degree_census().counts == {3: 32, 4: 2}


def test_combine_four_requires_cubic_cuts():
    blocks = [petersen()] * 3 + [complete(5)]
    with pytest.raises(ConstructionError):
        combine_four(blocks, [0, 0, 0, 0])


def test_combine_four_small_planar():
    blocks = [complete(4)] * 4
    out = combine_four(blocks, [0, 0, 0, 0], require_planar=True)
    assert out.n == 4 * 4 - 6
    assert is_planar(out)


def test_combine_pattern_validation():
    with pytest.raises(ConstructionError):
        CombinePattern(identified=(0, 0, 0, 0),
                       cross=((0, 0, 2, 0), (0, 0, 2, 1),
                              (1, 0, 3, 0), (1, 1, 3, 1)))  # stub reused
    with pytest.raises(ConstructionError):
        CombinePattern(identified=(0, 0, 0, 0),
                       cross=((0, 0, 0, 1), (0, 0, 2, 1),
                              (1, 0, 3, 0), (1, 1, 3, 1)))  # same block
    assert DEFAULT_COMBINE_PATTERN.identified == (0, 0, 0, 0)


def test_combine_four_petersen_is_hypotraceable():
    out = combine_four([petersen()] * 4, [0, 0, 0, 0])
    rep = classify(out, Budget(max_nodes=30_000_000), with_aut=False)
    assert rep.hypotraceable is True
    assert rep.traceable is False


def test_build_order_validation():
    bases = {}
    with pytest.raises(ConstructionError):
        build_order(39, bases)
    with pytest.raises(ConstructionError):
        build_order(44, bases)  # empty map has no base for residue 0


def test_build_order_uses_matching_base():
    from hypoham.report import default_bases
    bases = default_bases()
    g41 = build_order(41, bases)
    assert g41.n == 41
    g45 = build_order(45, bases)
    assert g45.n == 45
    assert is_planar(g45)


def test_h_equivalent_and_strictly_bigger():
    h = Graph.from_edges(2, [(0, 1)], labels=("x", "y"))
    tri = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], labels=("x", "y", "z"))
    tri2 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], labels=("x", "y", "u"))
    k4 = complete(4).relabel({"0": "x", "1": "y"})
    maps = SharedSubgraphMap({"x": "x", "y": "y"}, {"x": "x", "y": "y"})
    assert h_equivalent(tri, tri2, h, maps)
    assert not h_equivalent(tri, k4, h, maps)
    assert h_strictly_bigger(k4, tri, h, maps)
    assert not h_strictly_bigger(tri, tri2, h, maps)


def test_shared_subgraph_map_validation():
    h = Graph.from_edges(2, [(0, 1)], labels=("x", "y"))
    tri = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)], labels=("x", "y", "z"))
    bad_cover = SharedSubgraphMap({"x": "x"}, {"x": "x", "y": "y"})
    with pytest.raises(ConstructionError):
        bad_cover.validate(h, tri, tri)
    not_injective = SharedSubgraphMap({"x": "x", "y": "x"},
                                      {"x": "x", "y": "y"})
    with pytest.raises(ConstructionError):
        not_injective.validate(h, tri, tri)
    # x and z are adjacent in tri, but map the H edge to a non-edge elsewhere
    square = cycle(4).relabel({"0": "x", "2": "z"})
    to_nonedge = SharedSubgraphMap({"x": "x", "y": "z"}, {"x": "x", "y": "z"})
    with pytest.raises(ConstructionError):
        to_nonedge.validate(h, square, square)
