"""Reproduction report: run every tracked claim, compare against the claimed
value, and emit a machine-readable table with one row per claim.

Statuses are exactly: match, mismatch, skipped(budget), skipped(offline).
A claim that cannot be attempted is never dropped silently; it appears with
a skip status and a reason in its detail field.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .catalog import fixture_names, load_fixture, load_fixture_embedding
from .constructions import (DEFAULT_COMBINE_PATTERN, build_order, combine_four,
                            insert, th)
from .graph import Graph
from .grinberg import exact_feasibility, residue_screen
from .hamiltonicity import (Budget, DEFAULT_BUDGET, classify,
                            find_hamiltonian_cycle, verify_cycle)
from .hog import HogClient, HogError, HogNetworkError, manifest, verify_entry
from .ledger import (BoundsLedger, CHAIN_C2_3, CHAIN_P1_3, CHAIN_P2_3,
                     baseline_ledger, evaluate_chain, improved_ledger)
from .named import complete, petersen
from .planarity import (crossing_number_at_most_one, embedding_for, girth,
                        is_planar)
from .symmetry import automorphism_group_order, canonical_form, is_isomorphic

SCHEMA = "hypoham-report/1"

STATUS_MATCH = "match"
STATUS_MISMATCH = "mismatch"
STATUS_SKIP_BUDGET = "skipped(budget)"
STATUS_SKIP_OFFLINE = "skipped(offline)"


class _SkipBudget(Exception):
    pass


class _SkipOffline(Exception):
    pass


@dataclass(frozen=True)
class ReportRow:
    claim: str
    paper: str
    computed: str
    status: str
    detail: str = ""
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "paper": self.paper,
            "computed": self.computed,
            "status": self.status,
            "detail": self.detail,
            "elapsed": round(self.elapsed, 3),
        }


@dataclass
class ReproReport:
    scope: str
    rows: list[ReportRow] = field(default_factory=list)
    ledger: Optional[BoundsLedger] = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(r.status == STATUS_MISMATCH for r in self.rows)

    def counts(self) -> dict[str, int]:
        out = {STATUS_MATCH: 0, STATUS_MISMATCH: 0,
               STATUS_SKIP_BUDGET: 0, STATUS_SKIP_OFFLINE: 0}
        for r in self.rows:
            out[r.status] = out.get(r.status, 0) + 1
        return out

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "scope": self.scope,
            "rows": [r.to_dict() for r in self.rows],
            "counts": self.counts(),
            "ledger": self.ledger.to_dict() if self.ledger else None,
            "elapsed": round(self.elapsed, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @classmethod
    def from_dict(cls, payload: dict) -> "ReproReport":
        if payload.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {payload.get('schema')!r}")
        rows = [ReportRow(claim=r["claim"], paper=r["paper"],
                          computed=r["computed"], status=r["status"],
                          detail=r.get("detail", ""),
                          elapsed=r.get("elapsed", 0.0))
                for r in payload["rows"]]
        led = (BoundsLedger.from_dict(payload["ledger"])
               if payload.get("ledger") else None)
        return cls(scope=payload["scope"], rows=rows, ledger=led,
                   elapsed=payload.get("elapsed", 0.0))

    def format_table(self) -> str:
        widths = [max(len(r.claim) for r in self.rows) if self.rows else 5,
                  max((len(r.paper) for r in self.rows), default=5),
                  max((len(r.computed) for r in self.rows), default=8)]
        widths = [max(w, len(h)) for w, h in
                  zip(widths, ("claim", "paper", "computed"))]
        lines = [
            f"{'claim':<{widths[0]}}  {'paper':<{widths[1]}}  "
            f"{'computed':<{widths[2]}}  status",
        ]
        lines.append("  ".join("-" * w for w in widths) + "  " + "-" * 16)
        for r in self.rows:
            lines.append(
                f"{r.claim:<{widths[0]}}  {r.paper:<{widths[1]}}  "
                f"{r.computed:<{widths[2]}}  {r.status}"
                + (f"  [{r.detail}]" if r.detail else ""))
        c = self.counts()
        lines.append("")
        lines.append(
            f"match={c[STATUS_MATCH]} mismatch={c[STATUS_MISMATCH]} "
            f"skipped(budget)={c[STATUS_SKIP_BUDGET]} "
            f"skipped(offline)={c[STATUS_SKIP_OFFLINE]} "
            f"elapsed={self.elapsed:.1f}s")
        return "\n".join(lines)


class _Runner:
    def __init__(self, progress: Optional[Callable[[ReportRow], None]] = None):
        self.rows: list[ReportRow] = []
        self.progress = progress

    def run(self, claim: str, paper: str,
            thunk: Callable[[], tuple[str, bool]],
            detail: str = "") -> None:
        t0 = time.monotonic()
        try:
            computed, ok = thunk()
            status = STATUS_MATCH if ok else STATUS_MISMATCH
            note = detail
        except _SkipOffline as exc:
            computed, status, note = "-", STATUS_SKIP_OFFLINE, str(exc)
        except _SkipBudget as exc:
            computed, status, note = "-", STATUS_SKIP_BUDGET, str(exc)
        except (HogNetworkError,) as exc:
            computed, status, note = "-", STATUS_SKIP_OFFLINE, str(exc)
        row = ReportRow(claim=claim, paper=paper, computed=computed,
                        status=status, detail=note,
                        elapsed=time.monotonic() - t0)
        self.rows.append(row)
        if self.progress:
            self.progress(row)

    def matched(self, claim: str) -> bool:
        return any(r.claim == claim and r.status == STATUS_MATCH
                   for r in self.rows)


def _require_decided(value, what: str):
    if value is None:
        raise _SkipBudget(f"{what} undecided within budget")
    return value


def _fixture_or_skip(name: str) -> Graph:
    if name not in fixture_names():
        raise _SkipOffline(f"fixture {name} not available")
    return load_fixture(name)


def _central_quad() -> tuple[int, int, int, int]:
    """The shipped witnesses index their central 4-face as vertices 0..3 in
    cycle order; th expansion targets it."""
    return (0, 1, 2, 3)


def reproduce(scope: str = "quick",
              budget: Optional[Budget] = None,
              offline: bool = True,
              client: Optional[HogClient] = None,
              progress: Optional[Callable[[ReportRow], None]] = None)\
        -> ReproReport:
    """Run the claims table. `quick` covers the cheap structural claims and
    the manifest; `full` adds the complete hypohamiltonicity verifications,
    the constructions, and the bounds ledger."""
    if scope not in ("quick", "full"):
        raise ValueError(f"scope must be quick or full, got {scope!r}")
    if budget is None:
        budget = Budget(max_nodes=20_000_000, max_seconds=120.0)
    if client is None:
        client = HogClient(offline=offline)
    t0 = time.monotonic()
    r = _Runner(progress)

    # -- tiny sanity anchors --------------------------------------------------

    def petersen_row():
        rep = classify(petersen(), budget, with_paths=False, with_aut=False)
        val = _require_decided(rep.hypohamiltonian, "hypohamiltonicity")
        return f"hypohamiltonian={val}", val is True

    r.run("petersen.hypohamiltonian", "hypohamiltonian=True", petersen_row)

    def k4_row():
        rep = classify(complete(4), budget, with_paths=False, with_aut=False)
        ham = _require_decided(rep.hamiltonian, "hamiltonicity")
        hypo = rep.hypohamiltonian
        return (f"hamiltonian={ham} hypohamiltonian={hypo}",
                ham is True and hypo is False)

    r.run("k4.hamiltonian", "hamiltonian=True hypohamiltonian=False", k4_row)

    # -- cheap structural claims on the 34-vertex witnesses --------------------

    for name in ("ph34_a", "ph34_b"):
        def order_row(name=name):
            g = _fixture_or_skip(name)
            return f"order={g.n}", g.n == 34

        def cubic_row(name=name):
            g = _fixture_or_skip(name)
            c = g.degree_census().counts.get(3, 0)
            return f"cubic={c}", c == 26

        def planar_row(name=name):
            g = _fixture_or_skip(name)
            return f"planar={is_planar(g)}", is_planar(g)

        def girth_row(name=name):
            g = _fixture_or_skip(name)
            gt = girth(g)
            return f"girth={gt}", gt == 4

        def profile_row(name=name):
            emb = load_fixture_embedding(name)
            prof = emb.face_profile().as_dict()
            return f"profile={prof}", prof == {4: 5, 5: 18}

        r.run(f"{name}.order", "order=34", order_row)
        r.run(f"{name}.cubic", "cubic=26", cubic_row)
        r.run(f"{name}.planar", "planar=True", planar_row)
        r.run(f"{name}.girth", "girth=4", girth_row)
        r.run(f"{name}.face-profile", "profile={4: 5, 5: 18}", profile_row)

    def screen_row():
        emb = load_fixture_embedding("ph34_a")
        screen = residue_screen(emb.face_profile(), modulus=3)
        allowed = screen.admissible_inside_counts(4)
        return f"f4_inside in {sorted(allowed)}", sorted(allowed) == [1, 4]

    r.run("ph34_a.grinberg-mod3", "f4_inside in [1, 4]", screen_row)

    # -- manifest: every named remote graph appears exactly once ---------------

    for entry in manifest():
        def manifest_row(entry=entry):
            try:
                g = client.fetch(entry.hog_id)
            except HogNetworkError as exc:
                raise _SkipOffline(str(exc))
            except HogError as exc:
                return f"error: {exc}", False
            problems = verify_entry(entry, g)
            if scope == "full" and "hypohamiltonian" in entry.expected_properties:
                rep = classify(g, budget, with_paths=False, with_aut=False)
                val = rep.hypohamiltonian
                if val is None:
                    raise _SkipBudget("hypohamiltonicity undecided")
                if not val:
                    problems.append("expected hypohamiltonian, classifier says no")
            if problems:
                return "; ".join(problems), False
            return f"order={g.n} ok", True

        expected = (f"order={entry.expected_order}"
                    if entry.expected_order else "order unstated")
        r.run(f"hog.{entry.hog_id}.{entry.paper_name}",
              f"{expected} {','.join(entry.expected_properties)}",
              manifest_row)

    if scope == "quick":
        rep = ReproReport(scope=scope, rows=r.rows,
                          ledger=baseline_ledger(),
                          elapsed=time.monotonic() - t0)
        return rep

    # -- full verification of the witnesses ------------------------------------

    reports = {}

    for name in ("ph34_a", "ph34_b"):
        def hypo_row(name=name):
            g = _fixture_or_skip(name)
            rep = classify(g, budget, with_paths=False, with_aut=True)
            reports[name] = rep
            val = _require_decided(rep.hypohamiltonian, "hypohamiltonicity")
            return f"hypohamiltonian={val}", val is True

        r.run(f"{name}.hypohamiltonian", "hypohamiltonian=True", hypo_row)

        def aut_row(name=name):
            if name not in reports:
                raise _SkipBudget("classification unavailable")
            order = reports[name].aut_group_order
            return f"|Aut|={order}", order is not None and order >= 2

        r.run(f"{name}.aut-nontrivial", "|Aut|>=2", aut_row)

    def noniso_row():
        a = _fixture_or_skip("ph34_a")
        b = _fixture_or_skip("ph34_b")
        iso = is_isomorphic(a, b)
        return f"isomorphic={iso}", iso is False

    r.run("ph34.pairwise-nonisomorphic", "isomorphic=False", noniso_row)

    def certificates_row():
        if "ph34_a" not in reports:
            raise _SkipBudget("classification unavailable")
        g = load_fixture("ph34_a")
        rep = reports["ph34_a"]
        good = 0
        for v in range(g.n):
            cert = rep.certificates.get(f"cycle_del:{v}")
            if cert is None or cert.vertices is None:
                return f"missing certificate for deletion {v}", False
            cyc = list(cert.vertices)
            if len(cyc) != 33:
                return f"deletion {v}: cycle length {len(cyc)} != 33", False
            if not verify_cycle(g.delete_vertex(v), cyc):
                return f"deletion {v}: certificate failed revalidation", False
            good += 1
        return f"{good} cycles of length 33 validated", good == 34

    r.run("ph34_a.deletion-certificates", "34 validated cycles of length 33",
          certificates_row)

    def grinberg_exact_row():
        emb = load_fixture_embedding("ph34_a")
        res = exact_feasibility(emb)
        return f"feasible={res.feasible}", res.feasible is False

    r.run("ph34_a.grinberg-exact", "feasible=False", grinberg_exact_row)

    # -- constructions ---------------------------------------------------------

    derived: dict[str, Graph] = {}

    def th38_row():
        g = _fixture_or_skip("ph34_a")
        h = th(g, _central_quad(), keep_edges=True)
        rep = classify(h, budget, with_paths=False, with_aut=False)
        val = _require_decided(rep.hypohamiltonian, "hypohamiltonicity")
        ok = h.n == 38 and is_planar(h) and val is True
        derived["th38"] = h
        return (f"order={h.n} planar={is_planar(h)} hypohamiltonian={val}", ok)

    r.run("th.ph34_a.order38", "order=38 planar=True hypohamiltonian=True",
          th38_row)

    def th41_row():
        g = _fixture_or_skip("ph37_a")
        h = th(g, _central_quad(), keep_edges=True)
        rep = classify(h, budget, with_paths=False, with_aut=False)
        val = _require_decided(rep.hypohamiltonian, "hypohamiltonicity")
        ok = h.n == 41 and is_planar(h) and val is True
        derived["th41"] = h
        return (f"order={h.n} planar={is_planar(h)} hypohamiltonian={val}", ok)

    r.run("th.ph37_a.order41", "order=41 planar=True hypohamiltonian=True",
          th41_row)

    def build_row(n: int):
        def thunk():
            bases = default_bases()
            base_order = 40 + (n - 40) % 4
            if base_order not in bases:
                raise _SkipOffline(
                    f"no verified base of order {base_order} shipped")
            g = build_order(n, bases)
            rep = classify(g, budget, with_paths=False, with_aut=False)
            val = _require_decided(rep.hypohamiltonian, "hypohamiltonicity")
            ok = g.n == n and is_planar(g) and val is True
            return (f"order={g.n} planar={is_planar(g)} "
                    f"hypohamiltonian={val}", ok)
        return thunk

    for n in range(40, 49):
        r.run(f"build_order.{n}", "planar hypohamiltonian", build_row(n))

    def crossing_row():
        g = _fixture_or_skip("ph34_a")
        winners = crossing_one_family(g, budget, want=6)
        if len(winners) < 6:
            raise _SkipBudget(
                f"found {len(winners)} of 6 augmentations within budget")
        return f"{len(winners)} pairwise non-isomorphic, crossing number 1", True

    r.run("crossing1.six-from-ph34_a",
          "6 hypohamiltonian graphs, crossing number 1", crossing_row)

    def combine_petersen_row():
        blocks = [petersen()] * 4
        cuts = [0, 0, 0, 0]
        g = combine_four(blocks, cuts, DEFAULT_COMBINE_PATTERN)
        rep = classify(g, budget, require_nonhamiltonian=False)
        val = _require_decided(rep.hypotraceable, "hypotraceability")
        return f"order={g.n} hypotraceable={val}", g.n == 34 and val is True

    r.run("combine4.petersen", "order=34 hypotraceable=True",
          combine_petersen_row)

    def combine_130_row():
        g34 = _fixture_or_skip("ph34_a")
        w = next(v for v in range(g34.n) if g34.degree(v) == 3)
        g = combine_four([g34] * 4, [w] * 4, require_planar=True)
        ok = g.n == 130 and g.n == 4 * 34 - 6 and is_planar(g)
        return f"order={g.n} planar={is_planar(g)}", ok

    r.run("combine4.order130", "order=130 (=4*34-6) planar=True",
          combine_130_row)

    def insert_k4_row():
        g34 = _fixture_or_skip("ph34_a")
        w = next(v for v in range(g34.n) if g34.degree(v) == 3)
        h = insert(g34, w, complete(4))
        ok = h.n == 132 and h.n == evaluate_chain(CHAIN_P1_3) and is_planar(h)
        return f"order={h.n} planar={is_planar(h)}", ok

    r.run("insert.k4.order132", "order=132 (=4*(34-1)) planar=True",
          insert_k4_row)

    # -- bounds ledger ----------------------------------------------------------

    ledger = update_ledger_from_rows(r)

    def bound_row(name: str, expect_lower, expect_upper, chain=None):
        def thunk():
            b = ledger[name]
            if chain is not None:
                val = evaluate_chain(chain)
                if val != expect_upper:
                    return f"chain {chain} = {val}", False
            got = (b.lower, b.upper)
            return f"lower={b.lower} upper={b.upper}", got == (
                expect_lower, expect_upper)
        return thunk

    r.run("bounds.h4", "27 <= h4 <= 34", bound_row("h4", 27, 34))
    r.run("bounds.alpha0", "alpha0 <= 34", bound_row("alpha0", 23, 34))
    r.run("bounds.C1_3", "C1_3 <= 34", bound_row("C1_3", None, 34))
    r.run("bounds.C2_3", "C2_3 <= 2205 (2310-105)",
          bound_row("C2_3", None, 2205, chain=CHAIN_C2_3))
    r.run("bounds.P1_3", "P1_3 <= 132 (4*33)",
          bound_row("P1_3", None, 132, chain=CHAIN_P1_3))
    r.run("bounds.P2_3", "P2_3 <= 8694 (9108-414)",
          bound_row("P2_3", None, 8694, chain=CHAIN_P2_3))

    def n0_row():
        # n0 <= 40 rests on towers from every base order 40..43; if a tower
        # row was skipped the improvement is unattested, not contradicted
        needed = [f"build_order.{n}" for n in (40, 41, 42, 43)]
        missing = [c for c in needed if not r.matched(c)]
        if missing:
            if any(row.claim in needed and row.status == STATUS_MISMATCH
                   for row in r.rows):
                b = ledger["n0"]
                return f"lower={b.lower} upper={b.upper}", False
            raise _SkipOffline(
                "needs matched rows: " + ", ".join(missing))
        b = ledger["n0"]
        return f"lower={b.lower} upper={b.upper}", (b.lower, b.upper) == (None, 40)

    r.run("bounds.n0", "n0 <= 40", n0_row)
    r.run("bounds.cubic_min", "4 <= cubic_min <= 26",
          bound_row("cubic_min", 4, 26))

    return ReproReport(scope=scope, rows=r.rows, ledger=ledger,
                       elapsed=time.monotonic() - t0)


def update_ledger_from_rows(r: _Runner) -> BoundsLedger:
    """Ledger justified by this run: improved values only where the
    supporting verification rows matched, baseline values elsewhere."""
    if not r.matched("ph34_a.hypohamiltonian"):
        return baseline_ledger()
    # the 34-vertex witness carries h, h4, alpha0, alpha0_4, C1_3, cubic_min
    # and (with the literature constants) the three composition chains
    led = improved_ledger(witness_34="ph34_a")
    if not all(r.matched(f"build_order.{n}") for n in (40, 41, 42, 43)):
        led = led.with_upper("n0", 42, "prior literature value")
    return led


def update_ledger(report: ReproReport) -> BoundsLedger:
    """Public form of the ledger update for a finished report."""
    runner = _Runner()
    runner.rows = list(report.rows)
    return update_ledger_from_rows(runner)


def default_bases() -> dict[int, tuple[Graph, tuple[int, int, int, int], bool]]:
    """Base graphs for build_order: verified witnesses at orders 40..43.
    40 and 43 are direct fixtures when shipped; 41 and 42 come from th
    expansion of the 37- and 38-vertex graphs (keep-edges variant on the
    central 4-face). The map may be partial when a fixture is missing;
    callers skip the affected residue classes."""
    from .constructions import th_new_cycle
    bases: dict[int, tuple[Graph, tuple[int, int, int, int], bool]] = {}
    quad = _central_quad()
    names = fixture_names()
    if "ph40_a" in names:
        bases[40] = (load_fixture("ph40_a"), quad, False)
    if "ph37_a" in names:
        g37 = load_fixture("ph37_a")
        g41 = th(g37, quad, keep_edges=True)
        bases[41] = (g41, th_new_cycle(g37), False)
    if "ph34_a" in names:
        g34 = load_fixture("ph34_a")
        g38 = th(g34, quad, keep_edges=True)
        g42 = th(g38, th_new_cycle(g34), keep_edges=False)
        bases[42] = (g42, th_new_cycle(g38), False)
    if "ph43_a" in names:
        bases[43] = (load_fixture("ph43_a"), quad, False)
    return bases


def crossing_one_family(g: Graph, budget: Budget, want: int = 6,
                        cap: Optional[int] = None) -> list[tuple[int, int]]:
    """Edges whose addition to the planar hypohamiltonian graph g yields a
    hypohamiltonian graph of crossing number exactly 1; stops after `want`
    pairwise non-isomorphic augmentations. Returns the added edges.

    Every deletion of g is Hamiltonian and stays so in any supergraph, so an
    augmentation is hypohamiltonian exactly when it is non-Hamiltonian; the
    final classify call is a belt-and-braces confirmation on the winners
    only."""
    seen: set[bytes] = set()
    winners: list[tuple[int, int]] = []
    tried = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            tried += 1
            if cap is not None and tried > cap:
                return winners
            h = g.add_edge(u, v)
            # cheap rejections first: the addition must break planarity and
            # must not create a Hamiltonian cycle
            if is_planar(h):
                continue
            cyc = find_hamiltonian_cycle(h, budget)
            if cyc.kind != "none":
                continue
            number, _ = crossing_number_at_most_one(h, hint_edge=(u, v))
            if number != 1:
                continue
            key = canonical_form(h).key
            if key in seen:
                continue
            rep = classify(h, budget, with_paths=False, with_aut=False)
            if rep.hypohamiltonian is not True:
                continue
            seen.add(key)
            winners.append((u, v))
            if len(winners) >= want:
                return winners
    return winners
