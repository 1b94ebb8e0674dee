"""Hamiltonian search, certificates, classification.

Search results on small graphs are compared against exhaustive permutation
oracles; the named graphs pin well-known facts (the Petersen graph is
hypohamiltonian, the Herschel graph is non-Hamiltonian, the first flower
snark is hypohamiltonian).
"""
from __future__ import annotations

import random

from hypoham.hamiltonicity import (
    Budget, ClassificationReport, classify, find_hamiltonian_cycle,
    find_hamiltonian_path, is_hamiltonian, is_hypohamiltonian, is_traceable,
    recheck_report, verify_cycle, verify_path,
)
from hypoham.named import complete, cycle, flower_snark, herschel, path, petersen

from conftest import (
    brute_hamiltonian_cycle, brute_hamiltonian_path, random_graph,
)

BIG = Budget(max_nodes=20_000_000)


def test_search_agrees_with_brute_force():
    rng = random.Random(13)
    for _ in range(120):
        n = rng.randint(3, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6, 0.8]))
        cert = find_hamiltonian_cycle(g, BIG)
        assert cert.decided
        assert (cert.kind == "cycle") == brute_hamiltonian_cycle(g)
        pcert = find_hamiltonian_path(g, BIG)
        assert pcert.decided
        assert (pcert.kind == "path") == brute_hamiltonian_path(g)


def test_found_certificates_verify():
    rng = random.Random(14)
    checked = 0
    while checked < 25:
        g = random_graph(rng, rng.randint(5, 10), 0.6)
        cert = find_hamiltonian_cycle(g, BIG)
        if cert.kind == "cycle":
            verify_cycle(g, cert.vertices)
            checked += 1


def test_known_graphs():
    assert is_hamiltonian(cycle(5), BIG) is True
    assert is_hamiltonian(petersen(), BIG) is False
    assert is_hamiltonian(herschel(), BIG) is False
    assert is_traceable(petersen(), BIG) is True
    assert is_traceable(herschel(), BIG) is True
    assert is_hamiltonian(complete(4), BIG) is True


def test_verify_cycle_rejects_bad_witnesses():
    g = cycle(5)
    assert verify_cycle(g, (0, 1, 2, 3, 4))
    assert not verify_cycle(g, (0, 1, 2, 3))  # wrong length
    assert not verify_cycle(g, (0, 1, 2, 4, 3))  # 2-4 is not an edge
    assert not verify_cycle(g, (0, 1, 2, 3, 3))  # repeat
    assert not verify_cycle(complete(2), (0, 1))  # cycles need n >= 3


def test_verify_path_rejects_bad_witnesses():
    g = path(4)
    assert verify_path(g, (0, 1, 2, 3))
    assert not verify_path(g, (3, 2, 1))
    assert not verify_path(g, (0, 2, 1, 3))


def test_budget_exhaustion_is_undecided():
    g = flower_snark(7)  # 28 vertices, non-Hamiltonian
    cert = find_hamiltonian_cycle(g, Budget(max_nodes=10))
    assert not cert.decided
    assert cert.kind == "undecided"
    assert cert.reason
    assert is_hamiltonian(g, Budget(max_nodes=10)) is None


def test_classify_petersen():
    rep = classify(petersen(), BIG)
    assert rep.hamiltonian is False
    assert rep.traceable is True
    assert rep.hypohamiltonian is True
    assert rep.hypotraceable is False
    assert rep.almost_hypohamiltonian is False
    assert rep.exceptional_vertex is None
    assert rep.planar is False
    assert rep.girth == 5
    assert rep.aut_group_order == 120
    assert rep.cubic_count == 10
    # one cycle cert for g, one per deletion, plus path certs
    assert len(rep.certificates) >= 11
    for v in range(10):
        assert rep.certificates[f"cycle_del:{v}"].kind == "cycle"


def test_classify_flower_snark():
    rep = classify(flower_snark(5), BIG, with_paths=False)
    assert rep.hypohamiltonian is True
    assert rep.girth == 5
    assert rep.aut_group_order == 20


def test_classify_hamiltonian_graph():
    rep = classify(complete(4), BIG)
    assert rep.hamiltonian is True
    assert rep.hypohamiltonian is False
    assert rep.traceable is True
    assert rep.certificates["cycle"].kind == "cycle"


def test_classify_with_tiny_budget_reports_unknown():
    rep = classify(flower_snark(7), Budget(max_nodes=5), with_paths=False,
                   with_aut=False)
    assert rep.hypohamiltonian is None


def test_is_hypohamiltonian_wrapper():
    assert is_hypohamiltonian(petersen(), BIG) is True
    assert is_hypohamiltonian(cycle(5), BIG) is False
    assert is_hypohamiltonian(herschel(), BIG) is False


def test_report_roundtrip_and_recheck():
    rep = classify(petersen(), BIG)
    data = rep.to_dict()
    back = ClassificationReport.from_dict(data)
    assert back.hypohamiltonian is True
    assert recheck_report(petersen(), back) == []

    # corrupt one deletion certificate: a recheck must notice
    data2 = rep.to_dict()
    bad = dict(data2["certificates"]["cycle_del:0"])
    bad["vertices"] = list(bad["vertices"])
    bad["vertices"][0], bad["vertices"][1] = bad["vertices"][1], bad["vertices"][0]
    data2["certificates"]["cycle_del:0"] = bad
    tampered = ClassificationReport.from_dict(data2)
    problems = recheck_report(petersen(), tampered)
    assert problems, "tampered certificate must be flagged"


def test_recheck_detects_wrong_graph():
    rep = classify(petersen(), BIG)
    assert recheck_report(flower_snark(5), rep) != []
