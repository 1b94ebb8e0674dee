#!/usr/bin/env python3
"""Search for planar hypohamiltonian (and almost hypohamiltonian) graphs
built from a central-4-face flower and an all-pentagon patch.

Structure: a central 4-face (a, b, c, d) with degrees 4, 3, 4, 3, four more
4-faces each sharing one edge with it, and a disc of pentagons filling the
octagonal rim (p, x, a, u, t, v, c, y). The patch is grown pentagon by
pentagon along a single active boundary cycle; every completed candidate is
independently re-validated (embedding, face profile) and classified.

Usage: discover_flower.py ORDER [--max-found K] [--max-seconds S] [--out DIR]
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hypoham.graph import Graph
from hypoham.formats import emit_graph6, emit_rotation_file
from hypoham.hamiltonicity import Budget, classify, find_hamiltonian_cycle
from hypoham.planarity import embedding_for
from hypoham.symmetry import canonical_form

# flower vertex ids
A, B, C, D, P, T, X, Y, U, V = range(10)
FLOWER_EDGES = [
    (A, B), (B, C), (C, D), (D, A),       # central 4-face
    (B, P), (D, T),                        # third edges of the cubic centers
    (P, X), (X, A), (C, Y), (Y, P),        # 4-faces on ab and bc
    (A, U), (U, T), (T, V), (V, C),        # 4-faces on da and cd
]
RIM = [P, X, A, U, T, V, C, Y]  # active boundary, interior of the patch inside

# per-order targets: interior vertices, pentagons, total degree-4 vertices
PROFILES = {
    31: (21, 16, 7),
    34: (24, 18, 8),
    37: (27, 20, 9),
    40: (30, 22, 10),
    43: (33, 24, 11),
}


class Searcher:
    def __init__(self, order: int, sink, max_seconds: float | None = None,
                 rng: random.Random | None = None):
        self.order = order
        self.interior_target, self.pent_target, self.deg4_target = PROFILES[order]
        self.sink = sink
        self.rng = rng
        self.deadline = None if max_seconds is None else time.monotonic() + max_seconds
        self.nodes = 0
        self.emitted = 0
        self.stopped = False

        n0 = 10
        self.adj: list[set[int]] = [set() for _ in range(n0)]
        for e in FLOWER_EDGES:
            self.adj[e[0]].add(e[1])
            self.adj[e[1]].add(e[0])
        self.deg = [len(self.adj[v]) for v in range(n0)]
        self.region: list[int] = list(RIM)
        self.fresh_used = 0
        self.pent_used = 0
        self.deg4_final = 0   # finalized vertices of degree 4 (b, d are cubic)
        self.finalized = {B: 3, D: 3}

    # -- bookkeeping ---------------------------------------------------------

    def cap_left(self, v: int) -> int:
        return 4 - self.deg[v]

    def _add_edge(self, uu: int, vv: int) -> bool:
        """Add edge with simplicity + girth-4 guards; False if not allowed."""
        if vv in self.adj[uu]:
            return False
        if self.adj[uu] & self.adj[vv]:
            return False  # would close a triangle
        self.adj[uu].add(vv)
        self.adj[vv].add(uu)
        self.deg[uu] += 1
        self.deg[vv] += 1
        return True

    def _del_edge(self, uu: int, vv: int) -> None:
        self.adj[uu].discard(vv)
        self.adj[vv].discard(uu)
        self.deg[uu] -= 1
        self.deg[vv] -= 1

    def _new_vertex(self) -> int:
        vid = len(self.adj)
        self.adj.append(set())
        self.deg.append(0)
        return vid

    def _pop_vertex(self) -> None:
        self.adj.pop()
        self.deg.pop()

    # -- search --------------------------------------------------------------

    def run(self) -> None:
        try:
            self._grow()
        except KeyboardInterrupt:
            pass

    def _check_time(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.stopped = True
        return self.stopped

    def _finalize(self, verts: list[int]) -> bool:
        """Vertices leaving the boundary must rest at degree 3 or 4."""
        gained = 0
        for v in verts:
            d = self.deg[v]
            if d < 3 or d > 4:
                return False
            if d == 4:
                gained += 1
        if self.deg4_final + gained > self.deg4_target:
            return False
        for v in verts:
            self.finalized[v] = self.deg[v]
        self.deg4_final += sum(1 for v in verts if self.deg[v] == 4)
        return True

    def _definalize(self, verts: list[int]) -> None:
        for v in verts:
            self.deg4_final -= 1 if self.deg[v] == 4 else 0
            del self.finalized[v]

    def _emit(self) -> None:
        g = Graph.from_adjacency([sorted(nbrs) for nbrs in self.adj])
        self.sink(g)
        self.emitted += 1

    def _grow(self) -> None:
        if self.stopped or self._check_time():
            return
        self.nodes += 1
        R = self.region
        L = len(R)
        interior_left = self.interior_target - self.fresh_used
        pent_left = self.pent_target - self.pent_used

        # global feasibility
        if pent_left == 0:
            return  # region still open but no pentagons left
        if interior_left > 3 * pent_left:
            return
        if interior_left < 0:
            return
        # every deg-4 vertex still achievable? (future fresh vertices count)
        unfinal = len(self.adj) - len(self.finalized)
        if self.deg4_final + unfinal + interior_left < self.deg4_target:
            return
        # lower bound on pentagons needed to shrink the region to a close
        if L > 5:
            need = (L - 5 + 2) // 3 + 1
        else:
            need = 1
        if pent_left < need:
            return
        # exact close of the last region
        if L == 5 and pent_left == 1 and interior_left == 0:
            saved = list(R)
            if self._finalize(saved):
                if (self.fresh_used == self.interior_target
                        and self.deg4_final == self.deg4_target):
                    self._emit()
                self._definalize(saved)
            # fall through: a 5-boundary might instead be refined further
        # anchor: the boundary edge arriving at the most constrained vertex;
        # every completion has a pentagon on that edge, so enumerating all
        # pentagon shapes containing it (arc windows of k boundary edges at
        # all offsets) keeps the search complete within contiguous attachment
        caps = [self.cap_left(R[i]) for i in range(L)]
        mincap = min(caps)
        ties = [i for i in range(L) if caps[i] == mincap]
        best = ties[0] if self.rng is None else self.rng.choice(ties)
        i0 = (best - 1) % L

        max_k = min(4, L - 1)
        shapes = []
        for k in range(max_k, 0, -1):
            fresh_needed = 4 - k
            if fresh_needed > interior_left:
                continue
            for s in range(k):
                shapes.append((k, s))
        if self.rng is not None:
            self.rng.shuffle(shapes)
        for k, s in shapes:
            j0 = (i0 - s) % L
            arc = [R[(j0 + j) % L] for j in range(k + 1)]  # u0..uk
            self._try_pentagon(j0, k, arc, 4 - k)
            if self.stopped:
                return

    def _try_pentagon(self, i0: int, k: int, arc: list[int],
                      fresh_needed: int) -> None:
        R = self.region
        L = len(R)
        u0, uk = arc[0], arc[-1]
        inner = arc[1:-1]
        fresh: list[int] = []
        added: list[tuple[int, int]] = []

        ok = True
        cur = uk
        for _ in range(fresh_needed):
            nv = self._new_vertex()
            if self._add_edge(cur, nv):
                added.append((cur, nv))
                fresh.append(nv)
                cur = nv
            else:
                self._pop_vertex()
                ok = False
                break
        if ok:
            if k == 4 and L == 5:
                # exact close handled in _grow; adding edge cur->u0 would be
                # the existing boundary edge, so skip this shape here
                ok = False
            elif self._add_edge(cur, u0):
                added.append((cur, u0))
            else:
                ok = False
        if ok:
            # capacity guard: boundary vertices must not exceed degree 4
            touched = set(arc) | set(fresh)
            if any(self.deg[v] > 4 for v in touched):
                ok = False
        if ok and self._finalize(inner):
            self.region = _replace_arc(R, i0, k, list(reversed(fresh)))
            self.fresh_used += fresh_needed
            self.pent_used += 1
            self._grow()
            self.pent_used -= 1
            self.fresh_used -= fresh_needed
            self.region = R
            self._definalize(inner)
        for e in reversed(added):
            self._del_edge(*e)
        for _ in fresh:
            self._pop_vertex()


def _replace_arc(R: list[int], i0: int, k: int, middle: list[int]) -> list[int]:
    """Replace the boundary arc R[i0..i0+k] (inclusive, cyclic) by
    R[i0], middle..., R[i0+k]."""
    L = len(R)
    u0 = R[i0]
    uk = R[(i0 + k) % L]
    out = [u0] + middle + [uk]
    j = (i0 + k + 1) % L
    while j != i0:
        out.append(R[j])
        j = (j + 1) % L
    return out


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("order", type=int, choices=sorted(PROFILES))
    ap.add_argument("--max-found", type=int, default=4)
    ap.add_argument("--max-seconds", type=float, default=None)
    ap.add_argument("--max-candidates", type=int, default=None)
    ap.add_argument("--out", type=Path, default=Path("found"))
    ap.add_argument("--mode", choices=["hypo", "almost"], default="hypo")
    ap.add_argument("--stats-every", type=float, default=30.0)
    ap.add_argument("--seed", type=int, default=None,
                    help="shuffle the branching order (restarts explore "
                         "different parts of the tree first)")
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    expect_pent = PROFILES[args.order][1]
    expect_deg4 = PROFILES[args.order][2]
    found: list[Graph] = []
    seen_keys: set[bytes] = set()
    stats = {"cand": 0, "nonham": 0, "bad_profile": 0, "t0": time.monotonic(),
             "last": time.monotonic()}
    fail_at: dict[int, int] = {}

    searcher: Searcher

    def sink(g: Graph) -> None:
        stats["cand"] += 1
        if args.max_candidates and stats["cand"] >= args.max_candidates:
            searcher.stopped = True
        now = time.monotonic()
        if now - stats["last"] > args.stats_every:
            stats["last"] = now
            el = now - stats["t0"]
            worst = sorted(fail_at.items(), key=lambda kv: -kv[1])[:6]
            print(f"[{el:7.1f}s] candidates={stats['cand']} nonham={stats['nonham']} "
                  f"found={len(found)} nodes={searcher.nodes} fail_at={worst}",
                  flush=True)
        census = g.degree_census().counts
        if census.get(3, 0) + census.get(4, 0) != g.n or census.get(4, 0) != expect_deg4:
            stats["bad_profile"] += 1
            return
        emb = embedding_for(g)
        prof = emb.face_profile().as_dict()
        if prof != {4: 5, 5: expect_pent}:
            stats["bad_profile"] += 1
            return
        cyc = find_hamiltonian_cycle(g, Budget(max_nodes=5_000_000))
        if cyc.kind != "none":
            return
        stats["nonham"] += 1
        # fast deletion pre-screen, early exit on the first bad deletion
        # (almost mode tolerates exactly one)
        allowed_bad = 0 if args.mode == "hypo" else 1
        bad = 0
        screen = Budget(max_nodes=2_000_000)
        # adaptive order: deletions that failed often in earlier candidates
        # are the cheapest rejections, so try them first
        order = sorted(range(g.n), key=lambda v: -fail_at.get(v, 0))
        for v in order:
            sub = g.delete_vertex(v)
            c = find_hamiltonian_cycle(sub, screen)
            if c.kind == "none":
                fail_at[v] = fail_at.get(v, 0) + 1
                bad += 1
                if bad > allowed_bad:
                    return
        rep = classify(g, Budget(max_nodes=5_000_000), with_aut=False,
                       with_paths=False)
        want = (rep.hypohamiltonian is True if args.mode == "hypo"
                else rep.almost_hypohamiltonian is True)
        if not want:
            return
        key = canonical_form(g).key
        if key in seen_keys:
            return
        seen_keys.add(key)
        found.append(g)
        tag = f"{args.mode}{args.order}_{chr(ord('a') + len(found) - 1)}"
        g6 = emit_graph6(g)
        (args.out / f"{tag}.g6").write_bytes(g6 + b"\n")
        rot = emit_rotation_file(emb.rotations, len(emb.faces))
        (args.out / f"{tag}.rot").write_text(rot)
        extra = ""
        if args.mode == "almost":
            extra = f" exceptional={rep.exceptional_vertex}"
        print(f"FOUND {tag}: n={g.n} m={g.m} girth4 profile={prof}{extra} "
              f"g6={g6.decode()}", flush=True)
        if len(found) >= args.max_found:
            searcher.stopped = True

    rng = random.Random(args.seed) if args.seed is not None else None
    searcher = Searcher(args.order, sink, max_seconds=args.max_seconds, rng=rng)
    searcher.run()
    el = time.monotonic() - stats["t0"]
    print(f"done: nodes={searcher.nodes} candidates={stats['cand']} "
          f"nonham={stats['nonham']} found={len(found)} in {el:.1f}s", flush=True)
    return 0 if found else 1


if __name__ == "__main__":
    raise SystemExit(main())
