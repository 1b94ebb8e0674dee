"""Grinberg's criterion for plane graphs: face-count residue screens and an
exact inside/outside feasibility search.

For a plane graph with a Hamiltonian cycle, the faces split into inside and
outside classes and sum((s-2) * f'_s) == sum((s-2) * f''_s). The screen works
with that identity modulo m; the exact search assigns every face to a side,
enforcing at each vertex that exactly two incident edges separate the sides.
A feasible assignment yields an actual Hamiltonian cycle; exhaustion of the
assignment space is a proof of non-Hamiltonicity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .graph import GraphError
from .planarity import FaceProfile, PlanarEmbedding

DEFAULT_FACE_CAP = 30


class GrinbergError(GraphError):
    pass


def contributions(profile: FaceProfile) -> dict[int, int]:
    """Per-size Grinberg coefficient s - 2."""
    return {s: s - 2 for s, _ in profile.counts}


@dataclass(frozen=True)
class ResidueScreen:
    """Admissible inside-face counts modulo `modulus`.

    Sizes whose coefficient vanishes mod m are unconstrained; `splits` lists
    every jointly admissible assignment of inside counts to the constrained
    sizes. An empty `splits` refutes Hamiltonicity outright.
    """

    modulus: int
    profile: FaceProfile
    constrained_sizes: tuple[int, ...]
    splits: tuple[tuple[tuple[int, int], ...], ...]  # each: ((size, inside), ...)
    unconstrained_sizes: tuple[int, ...]

    @property
    def refutes(self) -> bool:
        return len(self.splits) == 0

    def admissible_inside_counts(self, size: int) -> tuple[int, ...]:
        if size in self.unconstrained_sizes:
            total = self.profile.as_dict()[size]
            return tuple(range(total + 1))
        vals = sorted({dict(split)[size] for split in self.splits})
        return tuple(vals)

    def describe(self) -> str:
        if self.refutes:
            return (f"no inside/outside split satisfies Grinberg's identity "
                    f"mod {self.modulus}: graph is non-Hamiltonian")
        parts = []
        for s in self.constrained_sizes:
            vals = self.admissible_inside_counts(s)
            parts.append(f"inside {s}-face count in {{{', '.join(map(str, vals))}}}")
        for s in self.unconstrained_sizes:
            parts.append(f"{s}-faces unconstrained mod {self.modulus}")
        return "; ".join(parts)


def residue_screen(profile: FaceProfile, modulus: int = 3,
                   cap: int = 10 ** 6) -> ResidueScreen:
    """Enumerate inside-count splits admissible for Grinberg's identity mod m."""
    if modulus < 2:
        raise GrinbergError("modulus must be at least 2")
    counts = profile.as_dict()
    fixed = 0  # sum of (s-2) * total_s, for the rewritten identity
    constrained: list[tuple[int, int, int]] = []  # (size, coeff mod m, total)
    unconstrained: list[int] = []
    for s, total in sorted(counts.items()):
        c = (s - 2) % modulus
        if c == 0:
            unconstrained.append(s)
        else:
            constrained.append((s, c, total))
            fixed = (fixed + c * total) % modulus
    # identity mod m: sum over sizes of c_s * (2 * inside_s - total_s) == 0
    space = 1
    for _, _, total in constrained:
        space *= total + 1
    if space > cap:
        raise GrinbergError(
            f"residue screen space {space} exceeds cap {cap}")
    good: list[tuple[tuple[int, int], ...]] = []
    ranges = [range(total + 1) for _, _, total in constrained]
    for combo in product(*ranges) if constrained else [()]:
        # identity mod m reduces to sum(2*c*inside) == sum(c*total)
        tot = 0
        for (s, c, _), inside in zip(constrained, combo):
            tot = (tot + c * 2 * inside) % modulus
        if tot == fixed:
            good.append(tuple((s, inside) for (s, _, _), inside
                              in zip(constrained, combo)))
    return ResidueScreen(
        modulus=modulus,
        profile=profile,
        constrained_sizes=tuple(s for s, _, _ in constrained),
        splits=tuple(good),
        unconstrained_sizes=tuple(unconstrained),
    )


@dataclass
class FeasibilityResult:
    """Outcome of the exact inside/outside assignment search."""

    feasible: bool
    assignment: Optional[tuple[int, ...]]  # per-face: 1 inside, 0 outside
    cycle: Optional[tuple[int, ...]]
    nodes: int
    elapsed: float
    transcript: list[str] = field(default_factory=list)


def _gap_bounds(seq: list[int]) -> tuple[int, int]:
    """Min/max possible sign changes of a cyclic 0/1/-1 sequence (-1 unknown)."""
    k = len(seq)
    known = [i for i in range(k) if seq[i] >= 0]
    if not known:
        return 0, k
    lo = hi = 0
    for idx, i in enumerate(known):
        j = known[(idx + 1) % len(known)]
        gap = (j - i - 1) % k if len(known) > 1 else k - 1
        x, y = seq[i], seq[j % k]
        differ = 1 if x != y else 0
        lo += differ
        top = gap + 1
        if (top - differ) % 2 == 1:
            top -= 1
        hi += top
    return lo, hi


def exact_feasibility(embedding: PlanarEmbedding,
                      forced_edges: Iterable[tuple[int, int]] = (),
                      forbidden_edges: Iterable[tuple[int, int]] = (),
                      face_cap: int = DEFAULT_FACE_CAP,
                      node_cap: int = 10 ** 7) -> FeasibilityResult:
    """Exhaust all inside/outside face assignments consistent with a
    Hamiltonian cycle; the outer face is pinned outside.

    `forced_edges` must lie on the cycle, `forbidden_edges` must not; both are
    expressed through the rule that a cycle edge is one whose two incident
    faces land on different sides. Feasible results carry the induced cycle,
    which is a genuine Hamiltonian cycle of the embedded graph. An infeasible
    result is an exhaustive refutation (for empty constraints: a proof of
    non-Hamiltonicity).
    """
    t0 = time.monotonic()
    g = embedding.graph
    faces = embedding.faces
    nf = len(faces)
    if nf > face_cap:
        raise GrinbergError(
            f"{nf} faces exceeds the exact-search cap of {face_cap}; "
            "use residue_screen for large embeddings")
    corner = embedding.corner_faces()
    edge_faces = embedding.edge_faces()

    def norm(e: tuple[int, int]) -> tuple[int, int]:
        u, v = e
        if u == v or not g.has_edge(u, v):
            raise GrinbergError(f"constraint names a non-edge {e}")
        return (u, v) if u < v else (v, u)

    # pair constraints: (f1, f2, want_different)
    pair_constraints: list[tuple[int, int, bool]] = []
    for e in forced_edges:
        f1, f2 = edge_faces[norm(e)]
        pair_constraints.append((f1, f2, True))
    for e in forbidden_edges:
        f1, f2 = edge_faces[norm(e)]
        pair_constraints.append((f1, f2, False))

    # faces touched by each vertex, vertices touched by each face
    touched: list[list[int]] = [[] for _ in range(nf)]
    for v in range(g.n):
        for f in set(corner[v]):
            touched[f].append(v)

    # assignment order: dual BFS from the outer face
    order: list[int] = []
    seen = [False] * nf
    queue = [embedding.outer_face]
    seen[embedding.outer_face] = True
    adj_faces: list[set[int]] = [set() for _ in range(nf)]
    for f1, f2 in edge_faces.values():
        adj_faces[f1].add(f2)
        adj_faces[f2].add(f1)
    while queue:
        f = queue.pop(0)
        order.append(f)
        for h in sorted(adj_faces[f]):
            if not seen[h]:
                seen[h] = True
                queue.append(h)
    for f in range(nf):
        if not seen[f]:
            order.append(f)  # disconnected dual cannot happen for connected g

    assign = [-1] * nf
    nodes = 0
    transcript: list[str] = [
        f"faces={nf}, profile=({embedding.face_profile()})",
        f"outer face #{embedding.outer_face} pinned outside",
    ]

    def vertex_ok(v: int) -> bool:
        seq = [assign[f] for f in corner[v]]
        lo, hi = _gap_bounds(seq)
        return lo <= 2 <= hi

    def pairs_ok(f: int) -> bool:
        for f1, f2, want_diff in pair_constraints:
            if f not in (f1, f2):
                continue
            a, b = assign[f1], assign[f2]
            if a >= 0 and b >= 0:
                if (a != b) != want_diff:
                    return False
        return True

    def extract_cycle() -> Optional[tuple[int, ...]]:
        deg = [0] * g.n
        nbr: list[list[int]] = [[] for _ in range(g.n)]
        for (u, v), (f1, f2) in edge_faces.items():
            if assign[f1] != assign[f2]:
                deg[u] += 1
                deg[v] += 1
                nbr[u].append(v)
                nbr[v].append(u)
        if any(d != 2 for d in deg):
            return None
        seqv = [0, nbr[0][0]]
        while True:
            prev, cur = seqv[-2], seqv[-1]
            nxt = nbr[cur][0] if nbr[cur][0] != prev else nbr[cur][1]
            if nxt == seqv[0]:
                break
            seqv.append(nxt)
            if len(seqv) > g.n:
                return None
        if len(seqv) != g.n:
            return None  # 2-regular but disconnected: not one spanning cycle
        return tuple(seqv)

    def dfs(idx: int) -> Optional[tuple[int, ...]]:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise GrinbergError(f"exact feasibility node cap {node_cap} exceeded")
        if idx == nf:
            return extract_cycle()
        f = order[idx]
        choices = (0,) if f == embedding.outer_face else (0, 1)
        for val in choices:
            assign[f] = val
            if pairs_ok(f) and all(vertex_ok(v) for v in touched[f]):
                got = dfs(idx + 1)
                if got is not None:
                    return got
        assign[f] = -1
        return None

    cyc = dfs(0)
    elapsed = time.monotonic() - t0
    if cyc is None:
        transcript.append(
            f"exhausted {nodes} assignment nodes: no side assignment admits "
            "a spanning 2-regular connected separation")
        return FeasibilityResult(False, None, None, nodes, elapsed, transcript)
    # sanity: Grinberg's identity must hold for the found cycle's assignment
    inside = sum(len(faces[f]) - 2 for f in range(nf) if assign[f] == 1)
    outside = sum(len(faces[f]) - 2 for f in range(nf) if assign[f] == 0)
    if inside != outside:
        raise GrinbergError("internal error: identity fails on found cycle")
    transcript.append(f"feasible after {nodes} nodes; identity {inside}=={outside}")
    return FeasibilityResult(True, tuple(assign), cyc, nodes, elapsed, transcript)


def grinberg_nonhamiltonian(embedding: PlanarEmbedding,
                            moduli: Iterable[int] = (3, 4),
                            exact: bool = True) -> Optional[str]:
    """Try to refute Hamiltonicity via Grinberg: residue screens first, the
    exact search last. Returns a human-readable reason, or None if Grinberg
    does not refute."""
    profile = embedding.face_profile()
    for m in moduli:
        screen = residue_screen(profile, modulus=m)
        if screen.refutes:
            return f"Grinberg residue screen mod {m} admits no split"
    if exact and len(embedding.faces) <= DEFAULT_FACE_CAP:
        result = exact_feasibility(embedding)
        if not result.feasible:
            return ("exact Grinberg assignment search exhausted "
                    f"({result.nodes} nodes) with no feasible split")
    return None
