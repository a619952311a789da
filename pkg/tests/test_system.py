import random

import pytest

from coxwords.system import (
    INF, build_system, classify_finite, endpoints, irreducible_components,
    is_cfc_finite, cfc_finite_family, named_family, named_system,
    parse_graph_file, parse_word, format_word,
)
from helpers import is_positive_definite, random_system


def test_build_examples():
    a3 = build_system([(0, 1, 3), (1, 2, 3)], 3)
    assert a3.bond(0, 1) == 3 and a3.bond(0, 2) == 2 and a3.bond(1, 1) == 1
    c2 = build_system([(0, 1, 4), (1, 2, 4)], 3)
    assert c2.bonds == named_system("affC2").bonds
    h2 = build_system([(0, 1, 5)], 2)
    assert classify_finite(h2).components[0][1] == "I2(5)"


def test_build_errors():
    with pytest.raises(ValueError):
        build_system([(0, 1, 3), (1, 0, 3)], 2)  # duplicate pair
    with pytest.raises(ValueError):
        build_system([(0, 1, 1)], 2)  # m < 2
    with pytest.raises(ValueError):
        build_system([(0, 2, 3)], 2)  # out of range
    with pytest.raises(ValueError):
        build_system([(1, 1, 3)], 2)  # diagonal


def test_classify_examples():
    a3 = named_system("A3")
    rep = classify_finite(a3)
    assert rep.finite and rep.verdict == "Finite"
    assert rep.components == ((frozenset({0, 1, 2}), "A3"),)
    tri = named_system("affA2")
    assert not classify_finite(tri).finite
    assert classify_finite(a3, []).finite
    assert classify_finite(a3, []).components == ()


def test_classify_matches_positive_definiteness():
    pytest.importorskip("numpy")
    rng = random.Random(991)
    for _ in range(120):
        system = random_system(rng, rank=rng.randint(1, 6),
                               bond_pool=(2, 2, 3, 3, 4, 5, 6, INF))
        rep = classify_finite(system)
        assert rep.finite == is_positive_definite(
            system, range(system.rank)), system.bonds
        # per-component agreement too
        for comp, name in rep.components:
            assert (name is not None) == is_positive_definite(system, comp)


def test_endpoints_examples():
    h3 = named_system("H3")
    eps = {e.generator: e for e in endpoints(h3)}
    assert eps[0].weight == 5 and eps[0].is_large and eps[0].is_odd
    assert eps[2].weight == 3 and not eps[2].is_large and eps[2].is_odd

    c4 = named_system("affC4")
    eps = endpoints(c4)
    assert {e.generator for e in eps} == {0, 4}
    assert all(e.weight == 4 and e.is_large and not e.is_odd for e in eps)

    e6 = named_system("affE6")
    eps = endpoints(e6)
    assert len(eps) == 3
    assert all(e.weight == 3 and e.is_odd for e in eps)

    inf_edge = build_system([(0, 1, INF)], 2)
    eps = endpoints(inf_edge)
    assert all(e.is_large and not e.is_odd for e in eps)


def test_endpoints_are_degree_one_vertices():
    rng = random.Random(5150)
    for _ in range(60):
        system = random_system(rng)
        expected = set()
        for v in system.generators():
            deg = sum(1 for u in system.generators()
                      if u != v and system.bond(u, v) >= 3)
            if deg == 1:
                expected.add(v)
        assert {e.generator for e in endpoints(system)} == expected


def test_components_examples_and_partition():
    a3 = named_system("A3")
    assert irreducible_components(a3, [0, 2]) == [frozenset({0}), frozenset({2})]
    assert irreducible_components(a3) == [frozenset({0, 1, 2})]
    d2 = named_family("D", 2)
    assert irreducible_components(d2) == [frozenset({0}), frozenset({1})]

    rng = random.Random(31337)
    for _ in range(60):
        system = random_system(rng)
        subset = {i for i in system.generators() if rng.random() < 0.7}
        comps = irreducible_components(system, subset)
        merged = sorted(x for c in comps for x in c)
        assert merged == sorted(subset)  # partition


def test_graph_file_roundtrip():
    text = """
# a comment
rank 3
bond 0 1 4
bond 1 2 inf
"""
    system = parse_graph_file(text)
    assert system.bond(0, 1) == 4 and system.bond(1, 2) == INF
    with pytest.raises(ValueError):
        parse_graph_file("bond 0 1 3")
    with pytest.raises(ValueError):
        parse_graph_file("rank x")
    with pytest.raises(ValueError):
        parse_graph_file("rank 2\nbond 0 1 two")


def test_named_families():
    assert named_system("B2").bond(0, 1) == 4
    assert named_system("F4").bonds[1][2] == 4
    assert named_system("E6").rank == 6
    assert named_system("affA1").bond(0, 1) == INF
    assert named_family("I2", INF).bond(0, 1) == INF
    assert named_system("D4").rank == 4
    with pytest.raises(ValueError):
        named_system("Q3")
    with pytest.raises(ValueError):
        named_system("affE9")
    # isomorphism sanity: F3 matches B3, E5 matches D5 in the finite catalog
    assert classify_finite(named_family("F", 3)).components[0][1] == "B3"
    assert classify_finite(named_family("E", 5)).components[0][1] == "D5"
    assert classify_finite(named_family("E", 4)).components[0][1] == "A4"


def test_cfc_finite_recognition():
    for name, n in [("A", 9), ("B", 9), ("D", 9), ("E", 9), ("F", 9), ("H", 9)]:
        assert is_cfc_finite(named_family(name, n)), name
    assert is_cfc_finite(named_family("I2", 55))
    assert not is_cfc_finite(named_system("affA2"))     # cycle
    assert not is_cfc_finite(named_system("affC4"))     # two heavy bonds
    assert not is_cfc_finite(named_system("affE6"))     # arms (2,2,2)
    assert not is_cfc_finite(build_system([(0, 1, INF)], 2))
    assert not is_cfc_finite(build_system([(0, 1, 3), (1, 2, 5), (2, 3, 3)], 4))
    comp = frozenset(range(9))
    assert cfc_finite_family(named_family("E", 9), comp) == ("E", 9)
    assert cfc_finite_family(named_family("D", 9), comp) == ("D", 9)


def test_word_parsing():
    e6 = named_system("affE6")
    w = parse_word(e6, "1 3 2 4 3 5 4 6 0 3 2 6")
    assert format_word(e6, w) == "1 3 2 4 3 5 4 6 0 3 2 6"
    a3 = named_system("A3")
    assert parse_word(a3, "2 1 3 2") == (1, 0, 2, 1)
    with pytest.raises(ValueError):
        parse_word(a3, "2 1 4")
