"""Exact Hamiltonian cycle/path decision with certificates, plus the derived
classifiers (hypohamiltonian, hypotraceable, almost hypohamiltonian).

The engine is a depth-first search over bitmask states with three prunings:
availability (every unvisited vertex must retain two usable connections),
forced-edge counting at the two path ends, and connectivity of the unvisited
region. Searches are budgeted and report explored node counts; positive
answers carry an explicitly re-checkable vertex sequence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, bits
from .planarity import girth, is_planar


@dataclass(frozen=True)
class Budget:
    """Limits for one exhaustive search; None means unlimited."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    def scaled(self, factor: float) -> "Budget":
        nodes = None if self.max_nodes is None else int(self.max_nodes * factor)
        secs = None if self.max_seconds is None else self.max_seconds * factor
        return Budget(nodes, secs)


DEFAULT_BUDGET = Budget(max_nodes=None, max_seconds=300.0)


@dataclass(frozen=True)
class Certificate:
    """Outcome of one search. kind is "cycle" or "path" when a witness was
    found, "none" for a completed exhaustive refutation, and "undecided" when
    a budget stopped the search first."""

    kind: str
    vertices: Optional[tuple[int, ...]]
    nodes_explored: int
    elapsed: float
    reason: str = ""

    @property
    def decided(self) -> bool:
        return self.kind != "undecided"

    @property
    def found(self) -> bool:
        return self.kind in ("cycle", "path")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices) if self.vertices is not None else None,
            "nodes_explored": self.nodes_explored,
            "elapsed": self.elapsed,
            "reason": self.reason,
        }

    @staticmethod
    def from_dict(d: dict) -> "Certificate":
        return Certificate(
            kind=d["kind"],
            vertices=tuple(d["vertices"]) if d.get("vertices") is not None else None,
            nodes_explored=int(d.get("nodes_explored", 0)),
            elapsed=float(d.get("elapsed", 0.0)),
            reason=d.get("reason", ""),
        )


class _Stop(Exception):
    def __init__(self, reason: str):
        self.reason = reason


def verify_cycle(g: Graph, sequence: tuple[int, ...]) -> bool:
    """Independent certificate check: the sequence must visit every vertex
    exactly once and ride existing edges, including the closing one."""
    n = g.n
    if len(sequence) != n or n < 3:
        return False
    if sorted(sequence) != list(range(n)):
        return False
    edge_set = set(g.edges())
    for i in range(n):
        u, v = sequence[i], sequence[(i + 1) % n]
        if (min(u, v), max(u, v)) not in edge_set:
            return False
    return True


def verify_path(g: Graph, sequence: tuple[int, ...]) -> bool:
    n = g.n
    if len(sequence) != n or n < 1:
        return False
    if sorted(sequence) != list(range(n)):
        return False
    edge_set = set(g.edges())
    for i in range(n - 1):
        u, v = sequence[i], sequence[i + 1]
        if (min(u, v), max(u, v)) not in edge_set:
            return False
    return True


def _component_mask(adj: tuple[int, ...], inside: int, seed: int) -> int:
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= adj[b.bit_length() - 1]
        nxt &= inside & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def _search_cycle(adj: tuple[int, ...], n: int, start: int,
                  budget: Budget) -> tuple[Optional[list[int]], int]:
    """Core exhaustive DFS. Returns (cycle, nodes) or (None, nodes) after a
    complete refutation; raises _Stop when the budget runs out."""
    full = (1 << n) - 1
    sbit = 1 << start
    adj_s = adj[start]
    deadline = None if budget.max_seconds is None else (
        time.monotonic() + budget.max_seconds)
    max_nodes = budget.max_nodes
    nodes = 0
    path = [start]

    def feasible(u: int, visited: int) -> Optional[list[int]]:
        """Prune tests for the state (path ends at u, visited set)."""
        free = full & ~visited
        ubit = 1 << u
        if free == 0:
            return None  # handled by caller (closing step)
        # availability + forced-edge counting
        forced_u = 0
        forced_s = 0
        f = free
        while f:
            b = f & -f
            f ^= b
            w = b.bit_length() - 1
            aw = adj[w]
            avail = (aw & free).bit_count()
            tou = 1 if aw & ubit else 0
            tos = 1 if aw & sbit else 0
            avail += tou + tos
            if avail < 2:
                return ["prune"]
            if avail == 2:
                if tou:
                    forced_u += 1
                    if forced_u > 1:
                        return ["prune"]
                if tos:
                    forced_s += 1
                    if forced_s > 1:
                        return ["prune"]
                if tou and tos and free != b:
                    # w needs both remaining end slots but is not the last vertex
                    return ["prune"]
        # endpoint viability
        if not (adj[u] & free):
            return ["prune"]
        if not (adj_s & free):
            return ["prune"]
        # the unvisited region must be one piece
        seed = free & -free
        if _component_mask(adj, free, seed) != free:
            return ["prune"]
        return None

    def extend(u: int, visited: int) -> Optional[list[int]]:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise _Stop("node budget exceeded")
        if deadline is not None and not (nodes & 2047):
            if time.monotonic() > deadline:
                raise _Stop("time budget exceeded")
        free = full & ~visited
        if free == 0:
            # close the cycle; orientation fixed by second < last vertex
            if (adj[u] & sbit) and u > path[1]:
                return list(path)
            return None
        bad = feasible(u, visited)
        if bad is not None:
            return None
        cand = adj[u] & free
        options = []
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            options.append(((adj[v] & free).bit_count(), v, b))
        options.sort()
        for _, v, b in options:
            path.append(v)
            got = extend(v, visited | b)
            if got is not None:
                return got
            path.pop()
        return None

    # first step: skip the max-index neighbor (orientation canonicalization)
    first = sorted(bits(adj_s))
    result = None
    nodes += 1
    for v in first[:-1] if len(first) > 1 else []:
        path.append(v)
        result = extend(v, sbit | (1 << v))
        if result is not None:
            break
        path.pop()
    return result, nodes


def find_hamiltonian_cycle(g: Graph, budget: Budget = DEFAULT_BUDGET) -> Certificate:
    """Decide whether g has a Hamiltonian cycle, exhaustively within budget."""
    t0 = time.monotonic()
    n = g.n
    if n < 3:
        return Certificate("none", None, 0, time.monotonic() - t0,
                           "cycles require at least 3 vertices")
    if g.min_degree() < 2 or not g.is_connected():
        return Certificate("none", None, 0, time.monotonic() - t0,
                           "degree/connectivity precondition fails")
    start = max(range(n), key=lambda v: (g.degree(v), -v))
    try:
        seq, nodes = _search_cycle(g.adj, n, start, budget)
    except _Stop as stop:
        return Certificate("undecided", None, 0, time.monotonic() - t0, stop.reason)
    elapsed = time.monotonic() - t0
    if seq is None:
        return Certificate("none", None, nodes, elapsed, "search exhausted")
    cert = Certificate("cycle", tuple(seq), nodes, elapsed)
    if not verify_cycle(g, cert.vertices):
        raise GraphError("internal error: produced cycle failed re-validation")
    return cert


def find_hamiltonian_path(g: Graph, budget: Budget = DEFAULT_BUDGET) -> Certificate:
    """Decide whether g has a Hamiltonian path (free endpoints).

    Reduction: g has a Hamiltonian path iff g plus one universal vertex has a
    Hamiltonian cycle, so the cycle engine and its prunings apply unchanged.
    """
    t0 = time.monotonic()
    n = g.n
    if n == 0:
        raise GraphError("Hamiltonian paths require at least 1 vertex")
    if n == 1:
        return Certificate("path", (0,), 0, time.monotonic() - t0)
    if n == 2:
        if g.has_edge(0, 1):
            return Certificate("path", (0, 1), 0, time.monotonic() - t0)
        return Certificate("none", None, 0, time.monotonic() - t0, "no edge")
    if not g.is_connected():
        return Certificate("none", None, 0, time.monotonic() - t0, "disconnected")
    aug = g.add_vertex(neighbors=range(n))
    try:
        seq, nodes = _search_cycle(aug.adj, aug.n, n, budget)
    except _Stop as stop:
        return Certificate("undecided", None, 0, time.monotonic() - t0, stop.reason)
    elapsed = time.monotonic() - t0
    if seq is None:
        return Certificate("none", None, nodes, elapsed, "search exhausted")
    # seq is a cycle of aug starting at the universal vertex n; strip it
    assert seq[0] == n
    cert = Certificate("path", tuple(seq[1:]), nodes, elapsed)
    if not verify_path(g, cert.vertices):
        raise GraphError("internal error: produced path failed re-validation")
    return cert


def is_hamiltonian(g: Graph, budget: Budget = DEFAULT_BUDGET) -> Optional[bool]:
    c = find_hamiltonian_cycle(g, budget)
    return c.found if c.decided else None


def is_traceable(g: Graph, budget: Budget = DEFAULT_BUDGET) -> Optional[bool]:
    c = find_hamiltonian_path(g, budget)
    return c.found if c.decided else None


@dataclass
class ClassificationReport:
    """Full classification of one graph, with per-claim certificates."""

    order: int
    size: int
    degree_census: dict[int, int]
    planar: bool
    girth: Optional[int]
    hamiltonian: Optional[bool]
    traceable: Optional[bool]
    hypohamiltonian: Optional[bool]
    hypotraceable: Optional[bool]
    almost_hypohamiltonian: Optional[bool]
    exceptional_vertex: Optional[int]
    aut_group_order: Optional[int]
    certificates: dict[str, Certificate] = field(default_factory=dict)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def cubic_count(self) -> int:
        return self.degree_census.get(3, 0)

    def nodes_total(self) -> int:
        return sum(c.nodes_explored for c in self.certificates.values())

    def to_dict(self) -> dict:
        return {
            "schema": "hypoham-classification/1",
            "order": self.order,
            "size": self.size,
            "degree_census": {str(k): v for k, v in self.degree_census.items()},
            "planar": self.planar,
            "girth": self.girth,
            "hamiltonian": self.hamiltonian,
            "traceable": self.traceable,
            "hypohamiltonian": self.hypohamiltonian,
            "hypotraceable": self.hypotraceable,
            "almost_hypohamiltonian": self.almost_hypohamiltonian,
            "exceptional_vertex": self.exceptional_vertex,
            "aut_group_order": self.aut_group_order,
            "certificates": {k: c.to_dict() for k, c in self.certificates.items()},
            "elapsed": self.elapsed,
            "notes": list(self.notes),
        }

    @staticmethod
    def from_dict(d: dict) -> "ClassificationReport":
        return ClassificationReport(
            order=d["order"],
            size=d["size"],
            degree_census={int(k): v for k, v in d["degree_census"].items()},
            planar=d["planar"],
            girth=d.get("girth"),
            hamiltonian=d.get("hamiltonian"),
            traceable=d.get("traceable"),
            hypohamiltonian=d.get("hypohamiltonian"),
            hypotraceable=d.get("hypotraceable"),
            almost_hypohamiltonian=d.get("almost_hypohamiltonian"),
            exceptional_vertex=d.get("exceptional_vertex"),
            aut_group_order=d.get("aut_group_order"),
            certificates={k: Certificate.from_dict(c)
                          for k, c in d.get("certificates", {}).items()},
            elapsed=d.get("elapsed", 0.0),
            notes=list(d.get("notes", [])),
        )


def _tristate_all(values: list[Optional[bool]]) -> Optional[bool]:
    """All-of over three-valued results: False dominates, then None."""
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


def classify(g: Graph, budget: Budget = DEFAULT_BUDGET,
             require_nonhamiltonian: bool = True,
             with_paths: bool = True,
             with_aut: bool = True) -> ClassificationReport:
    """Classify g: planarity, girth, Hamiltonicity of g and of every
    single-vertex deletion, traceability likewise, and the derived
    hypohamiltonian / hypotraceable / almost-hypohamiltonian verdicts.

    `require_nonhamiltonian` keeps the almost-hypohamiltonian definition that
    demands a non-Hamiltonian graph (the convention followed throughout).
    Budgets apply per search call; undecided calls surface as None verdicts
    rather than guesses.
    """
    t0 = time.monotonic()
    census = g.degree_census().counts
    planar = is_planar(g)
    try:
        gth = girth(g)
    except GraphError:
        gth = None
    aut = None
    if with_aut:
        from .symmetry import automorphism_group_order
        aut = automorphism_group_order(g)

    certs: dict[str, Certificate] = {}
    notes: list[str] = []

    cyc = find_hamiltonian_cycle(g, budget) if g.n >= 3 else Certificate(
        "none", None, 0, 0.0, "order below 3")
    certs["cycle"] = cyc
    ham: Optional[bool] = cyc.found if cyc.decided else None

    deletion_ham: dict[int, Optional[bool]] = {}
    for v in range(g.n):
        sub = g.delete_vertex(v)
        if sub.n < 3:
            deletion_ham[v] = False
            certs[f"cycle_del:{v}"] = Certificate("none", None, 0, 0.0,
                                                  "order below 3")
            continue
        c = find_hamiltonian_cycle(sub, budget)
        certs[f"cycle_del:{v}"] = c
        deletion_ham[v] = c.found if c.decided else None

    if ham is True:
        hypo: Optional[bool] = False
        almost: Optional[bool] = False
        exceptional: Optional[int] = None
    else:
        all_del = _tristate_all(list(deletion_ham.values()))
        if ham is None:
            hypo = None if all_del is not False else False
        else:
            hypo = all_del
        # almost: exactly one non-Hamiltonian deletion, all others Hamiltonian
        bad = [v for v, r in deletion_ham.items() if r is False]
        und = [v for v, r in deletion_ham.items() if r is None]
        if ham is None and require_nonhamiltonian:
            almost = None
        elif len(bad) == 1 and not und:
            almost = True
            exceptional = bad[0]
        elif len(bad) > 1 or (not bad and not und):
            almost = False
            exceptional = None
        else:
            almost = None
            exceptional = None
        if almost is not True:
            exceptional = None

    traceable: Optional[bool]
    hypotrace: Optional[bool]
    if not with_paths:
        traceable = None
        hypotrace = None
        notes.append("path checks skipped on request")
    else:
        if ham is True:
            traceable = True
            seq = certs["cycle"].vertices
            certs["path"] = Certificate("path", seq, 0, 0.0,
                                        "derived from Hamiltonian cycle")
            hypotrace = False
        else:
            p = find_hamiltonian_path(g, budget)
            certs["path"] = p
            traceable = p.found if p.decided else None
            if traceable is True:
                hypotrace = False
            else:
                deletion_tr: dict[int, Optional[bool]] = {}
                for v in range(g.n):
                    sub = g.delete_vertex(v)
                    if sub.n == 0:
                        deletion_tr[v] = False
                        continue
                    c = find_hamiltonian_path(sub, budget)
                    certs[f"path_del:{v}"] = c
                    deletion_tr[v] = c.found if c.decided else None
                all_tr = _tristate_all(list(deletion_tr.values()))
                if traceable is None:
                    hypotrace = None if all_tr is not False else False
                else:
                    hypotrace = all_tr

    report = ClassificationReport(
        order=g.n,
        size=g.m,
        degree_census=dict(census),
        planar=planar,
        girth=gth,
        hamiltonian=ham,
        traceable=traceable,
        hypohamiltonian=hypo,
        hypotraceable=hypotrace,
        almost_hypohamiltonian=almost,
        exceptional_vertex=exceptional,
        aut_group_order=aut,
        certificates=certs,
        elapsed=time.monotonic() - t0,
        notes=notes,
    )
    _validate_report_certificates(g, report)
    return report


def _validate_report_certificates(g: Graph, report: ClassificationReport) -> None:
    """Re-walk every positive certificate against a freshly built adjacency
    structure; a classification never leaves with an unverified witness."""
    for key, cert in report.certificates.items():
        if not cert.found or cert.vertices is None:
            continue
        if key == "cycle":
            ok = verify_cycle(g, cert.vertices)
        elif key == "path":
            ok = verify_path(g, cert.vertices)
        elif key.startswith("cycle_del:"):
            v = int(key.split(":", 1)[1])
            ok = verify_cycle(g.delete_vertex(v), cert.vertices)
        elif key.startswith("path_del:"):
            v = int(key.split(":", 1)[1])
            ok = verify_path(g.delete_vertex(v), cert.vertices)
        else:
            ok = False
        if not ok:
            raise GraphError(f"certificate {key!r} failed independent re-validation")


def recheck_report(g: Graph, report: ClassificationReport) -> list[str]:
    """Re-validate a stored report against g; returns a list of problems
    (empty means every positive certificate re-walked cleanly and the basic
    invariants still hold)."""
    problems: list[str] = []
    if report.order != g.n:
        problems.append(f"order mismatch: report {report.order}, graph {g.n}")
    if report.size != g.m:
        problems.append(f"size mismatch: report {report.size}, graph {g.m}")
    if report.degree_census != g.degree_census().counts:
        problems.append("degree census mismatch")
    for key, cert in report.certificates.items():
        if not cert.found or cert.vertices is None:
            continue
        try:
            if key == "cycle":
                ok = verify_cycle(g, cert.vertices)
            elif key == "path":
                ok = verify_path(g, cert.vertices)
            elif key.startswith("cycle_del:"):
                v = int(key.split(":", 1)[1])
                ok = verify_cycle(g.delete_vertex(v), cert.vertices)
            elif key.startswith("path_del:"):
                v = int(key.split(":", 1)[1])
                ok = verify_path(g.delete_vertex(v), cert.vertices)
            else:
                ok = False
                problems.append(f"unknown certificate key {key!r}")
        except GraphError as exc:
            ok = False
            problems.append(f"certificate {key!r}: {exc}")
        if not ok:
            problems.append(f"certificate {key!r} failed re-validation")
    return problems


def is_hypohamiltonian(g: Graph, budget: Budget = DEFAULT_BUDGET) -> Optional[bool]:
    return classify(g, budget, with_paths=False, with_aut=False).hypohamiltonian


def is_hypotraceable(g: Graph, budget: Budget = DEFAULT_BUDGET) -> Optional[bool]:
    return classify(g, budget, with_aut=False).hypotraceable
