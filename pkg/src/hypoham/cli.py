"""Command line interface.

Exit codes follow one convention across subcommands: 0 success (and, for
assertion-like commands, the asserted property holds), 1 the computation
finished but the property failed or a claim mismatched, 2 usage error, and
3 environment error (network, missing files the user did not name, offline
restrictions).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Optional

import click

from . import catalog, named
from .constructions import (ConstructionError, combine_four, insert, th)
from .formats import (FormatError, emit_graph6, emit_rotation_file,
                      parse_auto, parse_edge_list, parse_rotation_file)
from .graph import Graph, GraphError
from .grinberg import exact_feasibility, grinberg_nonhamiltonian, residue_screen
from .hamiltonicity import (Budget, ClassificationReport, classify,
                            recheck_report)
from .hog import (HogClient, HogError, HogNetworkError, HogParseError,
                  HogUnknownIdError, manifest)
from .planarity import (EmbeddingError, PlanarEmbedding,
                        crossing_number_at_most_one, check_planarity,
                        embedding_for, girth)
from .symmetry import automorphisms, canonical_form, is_isomorphic, orbits

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_ENVIRONMENT = 3


def _fail_env(message: str) -> "click.exceptions.Exit":
    click.echo(f"error: {message}", err=True)
    return click.exceptions.Exit(EXIT_ENVIRONMENT)


def _load_graph_file(path: Path) -> Graph:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise _fail_env(f"cannot read {path}: {exc}")
    text = data.decode("ascii", "replace").strip()
    first = text.split("\n", 1)[0].strip()
    try:
        if first and (first[0].isdigit() and " " in first or path.suffix == ".rot"):
            try:
                g, _rot, _f = parse_rotation_file(text)
                return g
            except FormatError:
                return parse_edge_list(text)
        return parse_auto(first.encode("ascii"))
    except FormatError as exc:
        raise click.UsageError(f"{path}: {exc}")


def resolve_graph(spec: str, offline: bool = True,
                  cache_dir: Optional[str] = None) -> Graph:
    """Graph arguments accept: a file path, `named:NAME`, `fixture:NAME`,
    `hog:ID`, or `g6:LITERAL`."""
    if spec.startswith("named:"):
        try:
            return named.by_name(spec[6:])
        except (KeyError, GraphError) as exc:
            raise click.UsageError(str(exc))
    if spec.startswith("fixture:"):
        try:
            return catalog.load_fixture(spec[8:])
        except KeyError as exc:
            raise click.UsageError(str(exc))
    if spec.startswith("g6:"):
        try:
            return parse_auto(spec[3:].encode("ascii"))
        except FormatError as exc:
            raise click.UsageError(str(exc))
    if spec.startswith("hog:"):
        try:
            hog_id = int(spec[4:])
        except ValueError:
            raise click.UsageError(f"bad HoG ID in {spec!r}")
        client = HogClient(cache_dir=Path(cache_dir) if cache_dir else None,
                           offline=offline)
        try:
            return client.fetch(hog_id)
        except HogUnknownIdError as exc:
            click.echo(f"error: {exc}", err=True)
            raise click.exceptions.Exit(EXIT_MISMATCH)
        except HogNetworkError as exc:
            raise _fail_env(str(exc))
        except HogParseError as exc:
            raise _fail_env(str(exc))
    return _load_graph_file(Path(spec))


def _budget_options(fn):
    fn = click.option("--max-nodes", type=int, default=None,
                      envvar="HYPOHAM_MAX_NODES",
                      help="Search node budget per decision call.")(fn)
    fn = click.option("--max-seconds", type=float, default=None,
                      envvar="HYPOHAM_MAX_SECONDS",
                      help="Wall clock budget per decision call.")(fn)
    return fn


def _budget(max_nodes: Optional[int], max_seconds: Optional[float]) -> Budget:
    if max_nodes is None and max_seconds is None:
        return Budget(max_nodes=50_000_000, max_seconds=300.0)
    return Budget(max_nodes=max_nodes, max_seconds=max_seconds)


def _write_graph(g: Graph, out: Optional[str]) -> None:
    payload = emit_graph6(g) + b"\n"
    if out:
        Path(out).write_bytes(payload)
    else:
        click.echo(payload.decode("ascii"), nl=False)


@click.group()
@click.version_option(package_name="hypoham")
def main() -> None:
    """Verify and construct (planar) hypohamiltonian, hypotraceable, and
    almost hypohamiltonian graphs."""


@main.command()
@click.argument("hog_id", type=int)
@click.option("--cache-dir", type=click.Path(), default=None,
              envvar="HYPOHAM_CACHE_DIR")
@click.option("--offline", is_flag=True, help="Forbid network access.")
@click.option("--out", type=click.Path(), default=None)
def fetch(hog_id: int, cache_dir: Optional[str], offline: bool,
          out: Optional[str]) -> None:
    """Fetch a graph from the House of Graphs by ID (cached on disk)."""
    client = HogClient(cache_dir=Path(cache_dir) if cache_dir else None,
                       offline=offline)
    try:
        g = client.fetch(hog_id)
    except HogUnknownIdError as exc:
        click.echo(f"error: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_MISMATCH)
    except (HogNetworkError, HogParseError) as exc:
        raise _fail_env(str(exc))
    _write_graph(g, out)
    click.echo(f"# HoG {hog_id}: order {g.n}, size {g.m}", err=True)


@main.command("manifest")
def manifest_cmd() -> None:
    """List the named House of Graphs entries tracked by this package."""
    for entry in manifest():
        order = entry.expected_order if entry.expected_order else "?"
        click.echo(f"{entry.hog_id:>6}  {entry.paper_name:<12} order={order:<4}"
                   f" {','.join(entry.expected_properties)}")


@main.command("classify")
@click.argument("graph_spec")
@_budget_options
@click.option("--json", "json_out", type=click.Path(), default=None,
              help="Write the full machine-readable report here.")
@click.option("--paths/--no-paths", default=True,
              help="Also decide traceability and hypotraceability.")
@click.option("--aut/--no-aut", default=True,
              help="Also compute the automorphism group order.")
@click.option("--offline", is_flag=True, default=True)
def classify_cmd(graph_spec: str, max_nodes: Optional[int],
                 max_seconds: Optional[float], json_out: Optional[str],
                 paths: bool, aut: bool, offline: bool) -> None:
    """Classify a graph: Hamiltonicity, all single-vertex deletions, and the
    derived hypohamiltonian / hypotraceable / almost verdicts."""
    g = resolve_graph(graph_spec, offline=offline)
    rep = classify(g, _budget(max_nodes, max_seconds),
                   with_paths=paths, with_aut=aut)
    click.echo(f"order={rep.order} size={rep.size} "
               f"degrees={dict(sorted(rep.degree_census.items()))}")
    click.echo(f"planar={rep.planar} girth={rep.girth} "
               f"aut_group_order={rep.aut_group_order}")
    click.echo(f"hamiltonian={rep.hamiltonian} traceable={rep.traceable}")
    click.echo(f"hypohamiltonian={rep.hypohamiltonian} "
               f"hypotraceable={rep.hypotraceable} "
               f"almost_hypohamiltonian={rep.almost_hypohamiltonian}"
               + (f" exceptional_vertex={rep.exceptional_vertex}"
                  if rep.exceptional_vertex is not None else ""))
    if rep.notes:
        for note in rep.notes:
            click.echo(f"note: {note}")
    if json_out:
        Path(json_out).write_text(json.dumps(rep.to_dict(), indent=2))
        click.echo(f"report written to {json_out}", err=True)
    undecided = [k for k, c in rep.certificates.items() if not c.decided]
    if undecided:
        click.echo(f"undecided searches: {len(undecided)} (raise budget)",
                   err=True)
        raise click.exceptions.Exit(EXIT_MISMATCH)


@main.command()
@click.argument("report_file", type=click.Path(exists=True))
@click.argument("graph_spec")
@click.option("--offline", is_flag=True, default=True)
def certify(report_file: str, graph_spec: str, offline: bool) -> None:
    """Re-validate every certificate in a stored classification report
    against the graph."""
    g = resolve_graph(graph_spec, offline=offline)
    try:
        payload = json.loads(Path(report_file).read_text())
        rep = ClassificationReport.from_dict(payload)
    except (OSError, ValueError, KeyError) as exc:
        raise click.UsageError(f"cannot load report: {exc}")
    problems = recheck_report(g, rep)
    if problems:
        for p in problems:
            click.echo(f"FAIL: {p}")
        raise click.exceptions.Exit(EXIT_MISMATCH)
    click.echo(f"all certificates valid ({len(rep.certificates)} entries)")


@main.command("planar")
@click.argument("graph_spec")
@click.option("--embedding", "emb_out", type=click.Path(), default=None,
              help="Write a rotation-system file for the embedding found.")
@click.option("--offline", is_flag=True, default=True)
def planar_cmd(graph_spec: str, emb_out: Optional[str], offline: bool) -> None:
    """Planarity check; exits 1 when the graph is nonplanar."""
    g = resolve_graph(graph_spec, offline=offline)
    res = check_planarity(g)
    if res.planar:
        emb = res.embedding
        prof = emb.face_profile().as_dict()
        click.echo(f"planar: faces={len(emb.faces)} profile={prof}")
        if emb_out:
            Path(emb_out).write_text(
                emit_rotation_file(emb.rotations, len(emb.faces)))
        return
    click.echo(f"nonplanar: obstruction edges {list(res.obstruction)}")
    raise click.exceptions.Exit(EXIT_MISMATCH)


@main.command("crossing")
@click.argument("graph_spec")
@click.option("--offline", is_flag=True, default=True)
def crossing_cmd(graph_spec: str, offline: bool) -> None:
    """Decide whether the crossing number is 0, 1, or at least 2."""
    g = resolve_graph(graph_spec, offline=offline)
    number, witness = crossing_number_at_most_one(g)
    if number == 0:
        click.echo("crossing number 0 (planar)")
    elif number == 1:
        click.echo(f"crossing number 1 (crossing pair {witness[0]} x {witness[1]})")
    else:
        click.echo("crossing number >= 2")


@main.command("grinberg")
@click.argument("graph_spec")
@click.option("--rot", type=click.Path(exists=True), default=None,
              help="Rotation-system file fixing the embedding to analyse.")
@click.option("--modulus", "-m", multiple=True, type=int, default=(3, 4))
@click.option("--exact/--screen-only", default=True)
@click.option("--offline", is_flag=True, default=True)
def grinberg_cmd(graph_spec: str, rot: Optional[str], modulus: tuple[int, ...],
                 exact: bool, offline: bool) -> None:
    """Grinberg residue screens and (optionally) the exact face-assignment
    feasibility decision for a plane graph."""
    if rot:
        g, rotations, _faces = parse_rotation_file(Path(rot).read_text())
        emb = PlanarEmbedding(g, rotations)
    else:
        g = resolve_graph(graph_spec, offline=offline)
        try:
            emb = embedding_for(g)
        except EmbeddingError as exc:
            raise click.UsageError(str(exc))
    prof = emb.face_profile()
    click.echo(f"face profile: {prof.as_dict()}")
    for m in modulus:
        screen = residue_screen(prof, modulus=m)
        click.echo(f"mod {m}: " + screen.describe())
    if exact:
        res = exact_feasibility(emb)
        if res.feasible:
            click.echo("exact: feasible (a Grinberg-consistent assignment "
                       "exists; no non-Hamiltonicity certificate)")
            if res.cycle:
                click.echo(f"exact search even found a Hamiltonian cycle: "
                           f"{res.cycle}")
        else:
            click.echo(f"exact: infeasible after {res.nodes} nodes; the "
                       "embedding certifies non-Hamiltonicity")
    verdict = grinberg_nonhamiltonian(emb, moduli=tuple(modulus), exact=exact)
    if verdict:
        click.echo(f"verdict: non-Hamiltonian ({verdict})")
    else:
        click.echo("verdict: no Grinberg obstruction found")


@main.group()
def construct() -> None:
    """Graph constructions: th expansion, insertion, four-block composition,
    and the order ladder."""


@construct.command("th")
@click.argument("graph_spec")
@click.option("--quad", required=True,
              help="Comma-separated 4-cycle, e.g. 0,1,2,3.")
@click.option("--keep-edges", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--offline", is_flag=True, default=True)
def construct_th(graph_spec: str, quad: str, keep_edges: bool,
                 out: Optional[str], offline: bool) -> None:
    g = resolve_graph(graph_spec, offline=offline)
    try:
        cyc = tuple(int(x) for x in quad.split(","))
        h = th(g, cyc, keep_edges=keep_edges)
    except (ValueError, ConstructionError, GraphError) as exc:
        raise click.UsageError(str(exc))
    _write_graph(h, out)
    click.echo(f"# th: order {g.n} -> {h.n}, size {g.m} -> {h.m}", err=True)


@construct.command("insert")
@click.argument("graph_spec")
@click.argument("host_spec")
@click.option("--cut", type=int, required=True,
              help="Cubic vertex of the inserted graph to remove.")
@click.option("--out", type=click.Path(), default=None)
@click.option("--offline", is_flag=True, default=True)
def construct_insert(graph_spec: str, host_spec: str, cut: int,
                     out: Optional[str], offline: bool) -> None:
    g = resolve_graph(graph_spec, offline=offline)
    host = resolve_graph(host_spec, offline=offline)
    try:
        h = insert(g, cut, host)
    except (ConstructionError, GraphError) as exc:
        raise click.UsageError(str(exc))
    _write_graph(h, out)
    click.echo(f"# insert: {host.n} blocks of order {g.n - 1} -> order {h.n}",
               err=True)


@construct.command("combine4")
@click.argument("specs", nargs=4)
@click.option("--cuts", required=True,
              help="Comma-separated cubic cut vertices, one per block.")
@click.option("--planar", "want_planar", is_flag=True,
              help="Search wiring patterns for a planar composition.")
@click.option("--out", type=click.Path(), default=None)
@click.option("--offline", is_flag=True, default=True)
def construct_combine4(specs: tuple[str, ...], cuts: str, want_planar: bool,
                       out: Optional[str], offline: bool) -> None:
    blocks = [resolve_graph(s, offline=offline) for s in specs]
    try:
        cut_list = [int(x) for x in cuts.split(",")]
        h = combine_four(blocks, cut_list, require_planar=want_planar)
    except (ValueError, ConstructionError, GraphError) as exc:
        raise click.UsageError(str(exc))
    _write_graph(h, out)
    click.echo(f"# combine4: orders {[b.n for b in blocks]} -> {h.n}", err=True)


@construct.command("build-order")
@click.argument("n", type=int)
@click.option("--out", type=click.Path(), default=None)
def construct_build_order(n: int, out: Optional[str]) -> None:
    """Planar hypohamiltonian graph of order N (N >= 40) from the shipped
    witnesses by iterated th expansion."""
    from .report import default_bases, _SkipOffline
    try:
        bases = default_bases()
        from .constructions import build_order
        h = build_order(n, bases)
    except _SkipOffline as exc:
        raise _fail_env(str(exc))
    except ConstructionError as exc:
        raise click.UsageError(str(exc))
    _write_graph(h, out)
    click.echo(f"# build-order: order {h.n}, size {h.m}", err=True)


@main.command("iso")
@click.argument("spec_a")
@click.argument("spec_b")
@click.option("--offline", is_flag=True, default=True)
def iso_cmd(spec_a: str, spec_b: str, offline: bool) -> None:
    """Isomorphism test; exits 1 when the graphs are not isomorphic."""
    a = resolve_graph(spec_a, offline=offline)
    b = resolve_graph(spec_b, offline=offline)
    if is_isomorphic(a, b):
        click.echo("isomorphic")
        return
    click.echo("not isomorphic")
    raise click.exceptions.Exit(EXIT_MISMATCH)


@main.command("aut")
@click.argument("graph_spec")
@click.option("--offline", is_flag=True, default=True)
def aut_cmd(graph_spec: str, offline: bool) -> None:
    """Automorphism group order and vertex orbits."""
    g = resolve_graph(graph_spec, offline=offline)
    perms = automorphisms(g)
    orbs = orbits(g, perms)
    cf = canonical_form(g)
    click.echo(f"automorphism group order: {len(perms)}")
    click.echo(f"vertex orbits ({len(orbs)}): "
               + " ".join("{" + ",".join(map(str, o)) + "}" for o in orbs))
    click.echo(f"canonical key: {cf.key.decode('ascii')}")


@main.command("reproduce")
@click.option("--scope", type=click.Choice(["quick", "full"]), default="quick")
@_budget_options
@click.option("--offline/--online", default=True,
              help="Offline (default) turns network rows into skips.")
@click.option("--json", "json_out", type=click.Path(), default=None)
@click.option("--cache-dir", type=click.Path(), default=None,
              envvar="HYPOHAM_CACHE_DIR")
def reproduce_cmd(scope: str, max_nodes: Optional[int],
                  max_seconds: Optional[float], offline: bool,
                  json_out: Optional[str], cache_dir: Optional[str]) -> None:
    """Run the claims-vs-computed table; exits 1 on any mismatch."""
    from .report import reproduce
    client = HogClient(cache_dir=Path(cache_dir) if cache_dir else None,
                       offline=offline)
    budget = _budget(max_nodes, max_seconds)

    def progress(row) -> None:
        click.echo(f"[{row.status:>18}] {row.claim}: {row.computed}", err=True)

    rep = reproduce(scope=scope, budget=budget, offline=offline,
                    client=client, progress=progress)
    click.echo(rep.format_table())
    if json_out:
        Path(json_out).write_text(rep.to_json())
        click.echo(f"report written to {json_out}", err=True)
    if not rep.ok:
        raise click.exceptions.Exit(EXIT_MISMATCH)


if __name__ == "__main__":
    main()
