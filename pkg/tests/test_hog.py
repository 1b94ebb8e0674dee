"""House of Graphs client, exercised entirely through injected transports.

No test here touches the network. The transport argument stands in for the
HTTP layer, so caching, offline behavior and error mapping can be pinned
deterministically.
"""
from __future__ import annotations

import json

import pytest

from hypoham.formats import emit_graph6
from hypoham.hog import (
    HogClient, HogNetworkError, HogOfflineError, HogParseError,
    HogUnknownIdError, MANIFEST, manifest, manifest_entry, verify_entry,
)
from hypoham.named import cube, cycle, herschel, petersen


def payload_for(g) -> bytes:
    return emit_graph6(g) + b"\n"


def one_graph_transport(hog_id: int, g, calls: list):
    url_tail = f"/api/graphs/{hog_id}/graph6"

    def transport(url: str) -> bytes:
        calls.append(url)
        if url.endswith(url_tail):
            return payload_for(g)
        raise HogUnknownIdError(f"no such graph at {url}")

    return transport


def test_fetch_parses_and_caches(tmp_path):
    calls: list[str] = []
    client = HogClient(cache_dir=tmp_path,
                       transport=one_graph_transport(1431, petersen(), calls))
    g = client.fetch(1431)
    assert g.n == 10
    assert client.cached(1431)
    assert client.cache_path(1431).exists()
    again = client.fetch(1431)
    assert again.adj == g.adj
    assert len(calls) == 1, "second fetch must come from the cache"
    # no stray temp files left behind
    assert sorted(p.name for p in tmp_path.iterdir()) == ["1431.g6"]


def test_fetch_offline_cold_cache_raises(tmp_path):
    client = HogClient(cache_dir=tmp_path, offline=True)
    with pytest.raises(HogOfflineError):
        client.fetch(1431)


def test_fetch_offline_warm_cache_works(tmp_path):
    calls: list[str] = []
    online = HogClient(cache_dir=tmp_path,
                       transport=one_graph_transport(7, cube(), calls))
    online.fetch(7)
    offline = HogClient(cache_dir=tmp_path, offline=True)
    assert offline.fetch(7).m == 12


def test_offline_error_is_a_network_error(tmp_path):
    client = HogClient(cache_dir=tmp_path, offline=True)
    with pytest.raises(HogNetworkError):
        client.fetch(1)


def test_unknown_id_propagates(tmp_path):
    client = HogClient(cache_dir=tmp_path,
                       transport=one_graph_transport(5, cube(), []))
    with pytest.raises(HogUnknownIdError):
        client.fetch(6)


def test_bad_payload_raises_parse_error(tmp_path):
    client = HogClient(cache_dir=tmp_path,
                       transport=lambda url: b"this is not graph6\xff\n")
    with pytest.raises(HogParseError):
        client.fetch(1)
    client = HogClient(cache_dir=tmp_path, transport=lambda url: b"")
    with pytest.raises(HogParseError):
        client.fetch(2)


def test_bad_payload_is_not_cached(tmp_path):
    client = HogClient(cache_dir=tmp_path, transport=lambda url: b"\xff\xfe")
    with pytest.raises(HogParseError):
        client.fetch(9)
    assert not client.cached(9)


def test_fetch_rejects_bad_ids(tmp_path):
    client = HogClient(cache_dir=tmp_path, offline=True)
    with pytest.raises(ValueError):
        client.fetch(0)
    with pytest.raises(ValueError):
        client.fetch(-3)


def test_search_ids(tmp_path):
    def transport(url: str) -> bytes:
        return json.dumps({"ids": [4, 8, 15]}).encode()

    client = HogClient(cache_dir=tmp_path, transport=transport)
    assert client.search_ids("hypohamiltonian") == [4, 8, 15]


def test_search_ids_bad_json(tmp_path):
    client = HogClient(cache_dir=tmp_path, transport=lambda url: b"not json")
    with pytest.raises(HogParseError):
        client.search_ids("x")
    client = HogClient(cache_dir=tmp_path,
                       transport=lambda url: json.dumps({"ids": ["a"]}).encode())
    with pytest.raises(HogParseError):
        client.search_ids("x")


def test_search_offline_raises(tmp_path):
    client = HogClient(cache_dir=tmp_path, offline=True)
    with pytest.raises(HogOfflineError):
        client.search_ids("anything")


def test_find_verified_uses_predicate_as_arbiter(tmp_path):
    graphs = {1: petersen(), 2: cube(), 3: cycle(10), 4: herschel()}

    def transport(url: str) -> bytes:
        if url.endswith("/graph6"):
            hog_id = int(url.split("/")[-2])
            return payload_for(graphs[hog_id])
        return json.dumps({"ids": sorted(graphs)}).encode()

    client = HogClient(cache_dir=tmp_path, transport=transport)
    hits = client.find_verified("query", order=10,
                                predicate=lambda g: g.min_degree() == 3)
    assert [hog_id for hog_id, _ in hits] == [1]
    hits = client.find_verified("query", order=10, predicate=lambda g: True)
    assert [hog_id for hog_id, _ in hits] == [1, 3]
    hits = client.find_verified("query", order=10, predicate=lambda g: True,
                                limit=1)
    assert len(hits) == 1


def test_manifest_shape():
    assert len(MANIFEST) == 12
    ids = [e.hog_id for e in MANIFEST]
    assert len(set(ids)) == 12
    assert manifest() == list(MANIFEST)
    entry = manifest_entry(1431)
    assert entry.expected_order == 42
    with pytest.raises(KeyError):
        manifest_entry(999999)


def test_verify_entry():
    entry = manifest_entry(1431)
    # wrong order: the discrepancy must say so
    problems = verify_entry(entry, petersen())
    assert any("order" in p for p in problems)
    entry31 = manifest_entry(51072)
    assert entry31.expected_order == 31
    from hypoham.catalog import load_fixture
    assert verify_entry(entry31, load_fixture("ah31_a")) == []
