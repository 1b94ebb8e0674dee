"""House of Graphs client: fetch graphs by numeric ID, cache them on disk,
and expose the named graphs of the source material as a static manifest.

The HTTP layer is a thin injectable port so tests can serve fixture bytes
without touching the network. Remote metadata is never trusted: callers are
expected to verify fetched graphs locally before relying on any claimed
property.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional

from .formats import FormatError, parse_graph6
from .graph import Graph

DEFAULT_BASE_URL = "https://houseofgraphs.org"
CACHE_ENV_VAR = "HYPOHAM_CACHE_DIR"


class HogError(Exception):
    """Base error for House of Graphs client failures."""


class HogNetworkError(HogError):
    """The service could not be reached (DNS, timeout, 5xx, offline mode)."""


class HogOfflineError(HogNetworkError):
    """Network use was requested while the client is in offline mode."""


class HogUnknownIdError(HogError):
    """The service reports no graph under the requested ID."""


class HogParseError(HogError):
    """The service answered, but the payload is not valid graph6."""


@dataclass(frozen=True)
class HogManifestEntry:
    """One named graph: its HoG ID, the name used in the source material,
    the expected order (None when the text does not state one), and the
    properties claimed for it."""

    hog_id: int
    paper_name: str
    expected_order: Optional[int]
    expected_properties: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.hog_id <= 0:
            raise ValueError("hog_id must be positive")
        if self.expected_order is not None and self.expected_order <= 0:
            raise ValueError("expected_order must be positive when given")


# Properties use a small fixed vocabulary so downstream verification can
# dispatch on them mechanically.
MANIFEST: tuple[HogManifestEntry, ...] = (
    HogManifestEntry(1431, "WienerAraya", 42,
                     ("planar", "hypohamiltonian")),
    HogManifestEntry(17030, "G5", 40,
                     ("planar", "hypohamiltonian",
                      "trivial-automorphism-group")),
    HogManifestEntry(17052, "G6", 40,
                     ("planar", "hypohamiltonian",
                      "trivial-automorphism-group")),
    HogManifestEntry(51072, "W31", 31,
                     ("planar", "almost-hypohamiltonian", "girth-4")),
    HogManifestEntry(51085, "H4", None,
                     ("planar",)),
    HogManifestEntry(51093, "Graph51093", 37,
                     ("planar", "hypohamiltonian",
                      "nontrivial-automorphism-group")),
    HogManifestEntry(51094, "Graph51094", 37,
                     ("planar", "hypohamiltonian",
                      "nontrivial-automorphism-group")),
    HogManifestEntry(51095, "Graph51095", 37,
                     ("planar", "hypohamiltonian",
                      "trivial-automorphism-group")),
    HogManifestEntry(51096, "Graph51096", 37,
                     ("planar", "hypohamiltonian",
                      "trivial-automorphism-group")),
    HogManifestEntry(51101, "Graph51101", 40,
                     ("planar", "hypohamiltonian",
                      "nontrivial-automorphism-group")),
    HogManifestEntry(51102, "Graph51102", 40,
                     ("planar", "hypohamiltonian",
                      "nontrivial-automorphism-group")),
    HogManifestEntry(51107, "Graph51107", None,
                     ("planar", "hypohamiltonian", "contains-H4",
                      "nontrivial-automorphism-group")),
)


def manifest() -> list[HogManifestEntry]:
    """The static table of every HoG ID named in the source material."""
    return list(MANIFEST)


def manifest_entry(hog_id: int) -> HogManifestEntry:
    for entry in MANIFEST:
        if entry.hog_id == hog_id:
            return entry
    raise KeyError(f"no manifest entry for HoG ID {hog_id}")


# Transport port: a callable taking a URL and returning the response body.
# It must raise HogUnknownIdError for a 404 and HogNetworkError for any
# other failure to produce bytes.
Transport = Callable[[str], bytes]


def requests_transport(timeout: float = 30.0) -> Transport:
    """Default transport built on requests. Imported lazily so the package
    works fully offline when a fake transport is injected."""
    import requests

    def get(url: str) -> bytes:
        try:
            resp = requests.get(url, timeout=timeout)
        except requests.RequestException as exc:
            raise HogNetworkError(f"GET {url} failed: {exc}") from exc
        if resp.status_code == 404:
            raise HogUnknownIdError(f"not found: {url}")
        if resp.status_code != 200:
            raise HogNetworkError(
                f"GET {url} returned status {resp.status_code}")
        return resp.content

    return get


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hypoham" / "hog"


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=path.name + ".")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, str(path))
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


@dataclass
class HogClient:
    """Fetch-and-cache client. `offline=True` turns any network attempt into
    HogOfflineError; cache hits still succeed, so a pre-populated cache
    directory supports fully offline operation."""

    cache_dir: Optional[Path] = None
    offline: bool = False
    transport: Optional[Transport] = None
    base_url: str = DEFAULT_BASE_URL
    _lock: threading.Lock = field(default_factory=threading.Lock,
                                  repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.cache_dir is None:
            self.cache_dir = default_cache_dir()
        self.cache_dir = Path(self.cache_dir)

    # -- cache ----------------------------------------------------------------

    def cache_path(self, hog_id: int) -> Path:
        return Path(self.cache_dir) / f"{hog_id}.g6"

    def cached(self, hog_id: int) -> bool:
        return self.cache_path(hog_id).is_file()

    # -- fetch ----------------------------------------------------------------

    def _graph6_url(self, hog_id: int) -> str:
        return f"{self.base_url}/api/graphs/{hog_id}/graph6"

    def _search_url(self, text: str) -> str:
        from urllib.parse import quote
        return f"{self.base_url}/api/graphs/search?q={quote(text)}"

    def _get(self, url: str) -> bytes:
        if self.offline:
            raise HogOfflineError(
                f"offline mode forbids network access (wanted {url})")
        transport = self.transport
        if transport is None:
            transport = requests_transport()
            self.transport = transport
        return transport(url)

    def fetch(self, hog_id: int) -> Graph:
        """Graph for the given HoG ID, from cache when possible. A network
        fetch stores the payload atomically (write temp file, then rename)
        so concurrent fetches never expose a torn cache entry."""
        if not isinstance(hog_id, int) or hog_id <= 0:
            raise ValueError(f"hog_id must be a positive integer, got {hog_id!r}")
        path = self.cache_path(hog_id)
        if path.is_file():
            return self._parse_payload(hog_id, path.read_bytes())
        data = self._get(self._graph6_url(hog_id))
        g = self._parse_payload(hog_id, data)
        with self._lock:
            _atomic_write(path, data.strip() + b"\n")
        return g

    def _parse_payload(self, hog_id: int, data: bytes) -> Graph:
        line = data.strip().split(b"\n")[0].strip()
        if not line:
            raise HogParseError(f"empty payload for HoG ID {hog_id}")
        try:
            return parse_graph6(line)
        except FormatError as exc:
            raise HogParseError(
                f"payload for HoG ID {hog_id} is not graph6: {exc}") from exc

    # -- search ---------------------------------------------------------------

    def search_ids(self, text: str) -> list[int]:
        """IDs matching a free-text search. The response is a JSON object
        with an integer list under "ids"."""
        data = self._get(self._search_url(text))
        try:
            payload = json.loads(data.decode("utf-8"))
            ids = payload["ids"]
            if not all(isinstance(i, int) and i > 0 for i in ids):
                raise ValueError("ids must be positive integers")
        except (ValueError, KeyError, UnicodeDecodeError) as exc:
            raise HogParseError(f"bad search response: {exc}") from exc
        return list(ids)

    def find_verified(self, text: str, order: int,
                      predicate: Callable[[Graph], bool],
                      limit: Optional[int] = None) -> list[tuple[int, Graph]]:
        """Search by text, keep only graphs of the given order that pass the
        caller's predicate. Remote metadata is advisory only; the predicate
        (normally a local classification) is the arbiter."""
        hits: list[tuple[int, Graph]] = []
        for hog_id in self.search_ids(text):
            try:
                g = self.fetch(hog_id)
            except HogUnknownIdError:
                continue
            if g.n != order:
                continue
            if predicate(g):
                hits.append((hog_id, g))
                if limit is not None and len(hits) >= limit:
                    break
        return hits


def verify_entry(entry: HogManifestEntry, g: Graph) -> list[str]:
    """Check a fetched graph against its manifest entry. Returns a list of
    discrepancy strings, empty when everything stated holds. Only cheap
    structural statements are checked here; Hamiltonicity claims are the
    classifier's business."""
    problems: list[str] = []
    if entry.expected_order is not None and g.n != entry.expected_order:
        problems.append(
            f"order {g.n} != expected {entry.expected_order}")
    if "planar" in entry.expected_properties:
        from .planarity import is_planar
        if not is_planar(g):
            problems.append("expected planar, got nonplanar")
    if "girth-4" in entry.expected_properties:
        from .planarity import girth
        gth = girth(g)
        if gth != 4:
            problems.append(f"expected girth 4, got {gth}")
    return problems
