"""Property-based tests (hypothesis): invariants that must hold on any graph."""
from __future__ import annotations

from hypothesis import given, settings, strategies as st

from hypoham.formats import emit_graph6, parse_graph6
from hypoham.graph import Graph
from hypoham.hamiltonicity import Budget, find_hamiltonian_cycle, verify_cycle
from hypoham.planarity import check_planarity
from hypoham.symmetry import canonical_form


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.integers(min_value=0, max_value=max(0, len(pairs) - 1)),
                          max_size=3 * n))
    edges = [pairs[i] for i in picks] if pairs else []
    return Graph.from_edges(n, edges)


@st.composite
def graph_with_permutation(draw, max_n=12):
    g = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_graph6_roundtrip(g):
    assert parse_graph6(emit_graph6(g).decode()).adj == g.adj


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_degree_sum_is_twice_size(g):
    assert sum(g.degrees()) == 2 * g.m


@given(graph_with_permutation())
@settings(max_examples=120, deadline=None)
def test_canonical_form_is_relabeling_invariant(gp):
    g, perm = gp
    assert canonical_form(g).key == canonical_form(g.permuted(perm)).key


@given(graph_with_permutation())
@settings(max_examples=60, deadline=None)
def test_permutation_preserves_degree_multiset(gp):
    g, perm = gp
    assert sorted(g.degrees()) == sorted(g.permuted(perm).degrees())


@given(graphs(max_n=10))
@settings(max_examples=80, deadline=None)
def test_embeddings_satisfy_euler(g):
    res = check_planarity(g) if g.n else None
    if res is None or res.embedding is None:
        return  # nonplanar or disconnected: nothing to check
    emb = res.embedding
    assert g.n - g.m + len(emb.faces) == 2
    assert emb.face_profile().incidence_sum() == 2 * g.m


@given(graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_found_cycles_always_verify(g):
    cert = find_hamiltonian_cycle(g, Budget(max_nodes=200_000))
    if cert.kind == "cycle":
        assert verify_cycle(g, cert.vertices)


@given(graphs(max_n=9))
@settings(max_examples=40, deadline=None)
def test_hamiltonicity_is_monotone_under_edge_addition(g):
    cert = find_hamiltonian_cycle(g, Budget(max_nodes=200_000))
    if cert.kind != "cycle":
        return
    nonedges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                if not g.has_edge(u, v)]
    for u, v in nonedges[:3]:
        bigger = g.add_edge(u, v)
        assert verify_cycle(bigger, cert.vertices)
