"""Catalog of committed witness graphs.

The package ships small graph6 files (with matching rotation-system files
where an embedding matters) under hypoham/fixtures/. These are locally
discovered and locally verified witnesses; every stated property is checked
by the test suite with this package's own classifier, never taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .formats import parse_graph6, parse_rotation_file
from .graph import Graph
from .planarity import PlanarEmbedding


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    order: int
    properties: tuple[str, ...]
    note: str = ""


# Registry of shipped witnesses. The loader also serves any *.g6 dropped in
# the fixtures directory, so this table is documentation plus a stable
# lookup order, not a gatekeeper.
FIXTURES: tuple[FixtureInfo, ...] = (
    FixtureInfo("ph34_a", 34,
                ("planar", "hypohamiltonian", "girth-4",
                 "nontrivial-automorphism-group"),
                "34-vertex planar hypohamiltonian graph, 26 cubic vertices"),
    FixtureInfo("ph34_b", 34,
                ("planar", "hypohamiltonian", "girth-4",
                 "nontrivial-automorphism-group"),
                "34-vertex planar hypohamiltonian graph, 26 cubic vertices"),
    FixtureInfo("ph37_a", 37,
                ("planar", "hypohamiltonian", "girth-4",
                 "nontrivial-automorphism-group"),
                "37-vertex planar hypohamiltonian graph, 28 cubic vertices"),
    FixtureInfo("ph37_b", 37,
                ("planar", "hypohamiltonian", "girth-4",
                 "trivial-automorphism-group"),
                "37-vertex planar hypohamiltonian graph, 28 cubic vertices"),
    FixtureInfo("ph37_c", 37,
                ("planar", "hypohamiltonian", "girth-4",
                 "trivial-automorphism-group"),
                "37-vertex planar hypohamiltonian graph, 28 cubic vertices"),
    FixtureInfo("ph37_d", 37,
                ("planar", "hypohamiltonian", "girth-4",
                 "nontrivial-automorphism-group"),
                "37-vertex planar hypohamiltonian graph, 28 cubic vertices"),
    FixtureInfo("ph40_a", 40,
                ("planar", "hypohamiltonian", "girth-4",
                 "trivial-automorphism-group"),
                "40-vertex planar hypohamiltonian graph, 30 cubic vertices"),
    FixtureInfo("ph43_a", 43,
                ("planar", "hypohamiltonian", "girth-4",
                 "trivial-automorphism-group"),
                "43-vertex planar hypohamiltonian graph, 32 cubic vertices"),
    FixtureInfo("ah31_a", 31,
                ("planar", "almost-hypohamiltonian", "girth-4"),
                "31-vertex planar almost hypohamiltonian graph, girth 4"),
)


def _data_dir():
    return resources.files("hypoham") / "fixtures"


def fixture_names() -> list[str]:
    """Names of all shipped fixtures (files named <name>.g6)."""
    names = []
    for item in _data_dir().iterdir():
        if item.name.endswith(".g6"):
            names.append(item.name[:-3])
    return sorted(names)


def fixture_info(name: str) -> Optional[FixtureInfo]:
    for info in FIXTURES:
        if info.name == name:
            return info
    return None


def load_fixture(name: str) -> Graph:
    path = _data_dir() / f"{name}.g6"
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise KeyError(f"no fixture named {name!r}; have {fixture_names()}")
    return parse_graph6(data.strip().split(b"\n")[0])


def load_fixture_embedding(name: str) -> PlanarEmbedding:
    """The committed embedding for a fixture, rebuilt from its rotation file
    and revalidated (faces traced, Euler's formula checked) on load."""
    path = _data_dir() / f"{name}.rot"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise KeyError(f"fixture {name!r} has no rotation file")
    g, rotations, declared_faces = parse_rotation_file(text)
    emb = PlanarEmbedding(g, rotations)
    if len(emb.faces) != declared_faces:
        raise ValueError(
            f"fixture {name!r}: rotation file declares {declared_faces} "
            f"faces but trace gives {len(emb.faces)}")
    return emb
