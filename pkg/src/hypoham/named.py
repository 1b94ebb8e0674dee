"""Built-in graphs used as anchors in tests, demos, and reproduction runs."""

from __future__ import annotations

from .graph import Graph, GraphError


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("paths need n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def cube() -> Graph:
    """The 3-cube: vertices are 3-bit strings, edges flip one bit."""
    edges = []
    for v in range(8):
        for bit in range(3):
            u = v ^ (1 << bit)
            if u > v:
                edges.append((v, u))
    return Graph.from_edges(8, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer n-cycle 0..n-1, inner vertices n..2n-1 with step k."""
    if n < 3 or not 1 <= k < n / 2:
        raise GraphError("generalized Petersen graphs need n >= 3, 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


def herschel() -> Graph:
    """Smallest planar non-Hamiltonian polyhedral graph (11 vertices)."""
    adj = {
        0: [1, 9, 10, 7],
        1: [0, 8, 2],
        2: [1, 9, 3],
        3: [2, 8, 4],
        4: [3, 9, 10, 5],
        5: [4, 8, 6],
        6: [5, 10, 7],
        7: [6, 8, 0],
        8: [1, 3, 5, 7],
        9: [2, 0, 4],
        10: [6, 4, 0],
    }
    return Graph.from_adjacency(adj)


def flower_snark(k: int) -> Graph:
    """J_k for odd k >= 5: hubs h_i joined to tips a_i, b_i, c_i; the a-tips
    form a k-cycle and the b- and c-tips one 2k-cycle b_0..b_{k-1} c_0..c_{k-1}."""
    if k < 5 or k % 2 == 0:
        raise GraphError("flower snarks are defined for odd k >= 5")
    edges = []
    for i in range(k):
        h, a, b, c = i, k + i, 2 * k + i, 3 * k + i
        edges += [(h, a), (h, b), (h, c)]
        edges.append((a, k + (i + 1) % k))
    ring = [2 * k + i for i in range(k)] + [3 * k + i for i in range(k)]
    edges += [(ring[i], ring[(i + 1) % (2 * k)]) for i in range(2 * k)]
    return Graph.from_edges(4 * k, edges)


NAMED = {
    "petersen": petersen,
    "herschel": herschel,
    "cube": cube,
    "dodecahedron": dodecahedron,
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "k33": lambda: complete_bipartite(3, 3),
}


def by_name(name: str) -> Graph:
    key = name.lower()
    if key.startswith("c") and key[1:].isdigit():
        return cycle(int(key[1:]))
    if key.startswith("gp(") and key.endswith(")"):
        inner = key[3:-1].split(",")
        return generalized_petersen(int(inner[0]), int(inner[1]))
    if key not in NAMED:
        raise GraphError(f"unknown named graph {name!r}; "
                         f"known: {', '.join(sorted(NAMED))}, cN, gp(n,k)")
    return NAMED[key]()
