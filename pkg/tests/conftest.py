"""Shared oracles for the test suite.

The point of these helpers is independence: they decide Hamiltonicity and
count automorphisms by exhaustive permutation search (or via networkx VF2),
so the fast search code in the package is always checked against something
that cannot share its bugs.
"""
from __future__ import annotations

import itertools
import random

import pytest

from hypoham.graph import Graph


def brute_hamiltonian_cycle(g: Graph) -> bool:
    """Exhaustive Hamiltonian cycle decision. Usable up to n == 10 or so."""
    n = g.n
    if n < 3:
        return False
    for perm in itertools.permutations(range(1, n)):
        walk = (0,) + perm
        if all(g.has_edge(walk[i], walk[(i + 1) % n]) for i in range(n)):
            return True
    return False


def brute_hamiltonian_path(g: Graph) -> bool:
    """Exhaustive Hamiltonian path decision. Usable up to n == 9 or so."""
    n = g.n
    if n == 1:
        return True
    for perm in itertools.permutations(range(n)):
        if perm[0] > perm[-1]:
            continue
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(n - 1)):
            return True
    return False


def brute_hypohamiltonian(g: Graph) -> bool:
    if brute_hamiltonian_cycle(g):
        return False
    return all(brute_hamiltonian_cycle(g.delete_vertex(v)) for v in range(g.n))


def brute_automorphism_order(g: Graph) -> int:
    """Count adjacency-preserving permutations by full enumeration (n <= 8)."""
    count = 0
    edges = set(g.edges())
    for perm in itertools.permutations(range(g.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
        if mapped == edges:
            count += 1
    return count


def vf2_automorphism_order(g: Graph) -> int:
    """Automorphism count through networkx VF2, as a second opinion."""
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    gx = nx.Graph()
    gx.add_nodes_from(range(g.n))
    gx.add_edges_from(g.edges())
    return sum(1 for _ in GraphMatcher(gx, gx).isomorphisms_iter())


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random graph forced connected by threading a random spanning path."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[i + 1]))) for i in range(n - 1)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
