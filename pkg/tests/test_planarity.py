"""Planarity, combinatorial embeddings, crossing number one, girth.

The strongest check here is the labeled census: the number of labeled
planar graphs on n vertices is 1, 2, 8, 64, 1023, 32071 for n = 1..6
(a published sequence), and we recount it by full enumeration.
"""
from __future__ import annotations

import pytest

from hypoham.graph import Graph, GraphError
from hypoham.named import (
    complete, complete_bipartite, cube, cycle, dodecahedron, herschel,
    path, petersen,
)
from hypoham.planarity import (
    EmbeddingError, FaceProfile, PlanarEmbedding, check_planarity,
    crossing_number_at_most_one, embedding_for, girth, is_planar,
)

LABELED_PLANAR_COUNTS = {1: 1, 2: 2, 3: 8, 4: 64, 5: 1023, 6: 32071}


def count_planar(n: int) -> int:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    count = 0
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
        if is_planar(Graph.from_edges(n, edges)):
            count += 1
    return count


def test_labeled_planar_census_small():
    for n in range(1, 6):
        assert count_planar(n) == LABELED_PLANAR_COUNTS[n]


def test_labeled_planar_census_n6():
    # 32768 graphs; the 697 nonplanar ones all contain K5 or K3,3.
    # Slow (tens of seconds) but it pins the decision procedure exactly.
    assert count_planar(6) == LABELED_PLANAR_COUNTS[6]


def test_known_planar_and_nonplanar():
    assert is_planar(cube())
    assert is_planar(herschel())
    assert is_planar(dodecahedron())
    assert not is_planar(complete(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert not is_planar(petersen())


def test_face_profiles_of_polyhedra():
    assert embedding_for(cube()).face_profile().as_dict() == {4: 6}
    assert embedding_for(herschel()).face_profile().as_dict() == {4: 9}
    assert embedding_for(dodecahedron()).face_profile().as_dict() == {5: 12}


def test_embedding_euler_and_incidence():
    for g in [cube(), herschel(), dodecahedron(), cycle(9)]:
        emb = embedding_for(g)
        f = len(emb.faces)
        assert g.n - g.m + f == 2
        assert emb.face_profile().incidence_sum() == 2 * g.m
        # every edge borders exactly two faces (loops through validation)
        assert len(emb.edge_faces()) == g.m


def test_corner_faces_cover_rotations():
    emb = embedding_for(cube())
    corners = emb.corner_faces()
    assert len(corners) == 8
    for v, faces in enumerate(corners):
        assert len(faces) == len(emb.rotations[v])


def test_single_vertex_embedding():
    emb = embedding_for(Graph.from_edges(1, []))
    assert len(emb.faces) == 1


def test_embedding_rejects_bad_rotation():
    g = complete(4)
    with pytest.raises(EmbeddingError):
        PlanarEmbedding(g, [[1, 2], [0, 2, 3], [0, 1, 3], [0, 1, 2]])
    # the all-sorted rotation system of K4 is a torus embedding (2 faces)
    rots = [[v for v in range(4) if v != u] for u in range(4)]
    with pytest.raises(EmbeddingError):
        PlanarEmbedding(g, rots)


def test_embedding_rejects_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(EmbeddingError):
        PlanarEmbedding(g, [[1], [0], [3], [2]])


def test_outer_face_selection():
    emb = embedding_for(cube())
    other = emb.with_outer_face(3)
    assert other.outer_face == 3
    with pytest.raises(EmbeddingError):
        emb.with_outer_face(99)


def test_obstruction_is_a_subgraph():
    res = check_planarity(complete(5))
    assert not res.planar
    assert res.embedding is None
    g = complete(5)
    for u, v in res.obstruction:
        assert g.has_edge(u, v)
    assert res.obstruction_vertices() <= set(range(5))


def test_disconnected_planarity():
    two_cubes = Graph.from_edges(
        16, [(u, v) for u, v in cube().edges()]
           + [(u + 8, v + 8) for u, v in cube().edges()])
    res = check_planarity(two_cubes)
    assert res.planar and res.embedding is None

    k5_plus_triangle = Graph.from_edges(
        8, [(u, v) for u, v in complete(5).edges()]
           + [(5, 6), (6, 7), (5, 7)])
    res = check_planarity(k5_plus_triangle)
    assert not res.planar
    assert res.obstruction_vertices() <= {0, 1, 2, 3, 4}


def test_crossing_number_zero_for_planar():
    number, witness = crossing_number_at_most_one(cube())
    assert number == 0 and witness is None


def test_crossing_number_one_for_k5_and_k33():
    for g in [complete(5), complete_bipartite(3, 3)]:
        number, witness = crossing_number_at_most_one(g)
        assert number == 1
        e1, e2 = witness
        assert g.has_edge(*e1) and g.has_edge(*e2)
        assert not set(e1) & set(e2)


def test_crossing_number_two_means_at_least_two():
    # petersen and K6 both have crossing number > 1
    assert crossing_number_at_most_one(petersen())[0] == 2
    assert crossing_number_at_most_one(complete(6))[0] == 2


def test_crossing_hint_edge_does_not_change_answer():
    g = complete(5)
    base = crossing_number_at_most_one(g)[0]
    for e in [(0, 1), (2, 4)]:
        assert crossing_number_at_most_one(g, hint_edge=e)[0] == base


def test_girth_values():
    assert girth(complete(4)) == 3
    assert girth(cube()) == 4
    assert girth(herschel()) == 4
    assert girth(petersen()) == 5
    assert girth(cycle(7)) == 7
    assert girth(dodecahedron()) == 5


def test_girth_rejects_forest():
    with pytest.raises(GraphError):
        girth(path(5))
    with pytest.raises(GraphError):
        girth(Graph.from_edges(3, []))


def test_face_profile_helpers():
    p = FaceProfile.from_sizes([4, 5, 5, 4, 6])
    assert p.as_dict() == {4: 2, 5: 2, 6: 1}
    assert p.face_count == 5
    assert p.incidence_sum() == 24
    assert "size 5" in str(p)
