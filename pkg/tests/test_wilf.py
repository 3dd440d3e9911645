from collections import Counter
from itertools import product

import pytest

from wordpat import oracle
from wordpat.pattern import count_occurrences, parse_pattern, symmetry_class
from wordpat.wilf import (DISTINCT, EQUIVALENT, PhiMap, bump_map, bump_target, classify,
                          empirically_equivalent, find_phi, phi_map, signature)


def words(k, n):
    return product(range(1, k + 1), repeat=n)


def test_equivalence_examples():
    assert empirically_equivalent("1121", "1221", 8, 4).verdict == EQUIVALENT
    assert empirically_equivalent("112", "112", 8, 4).equivalent
    rep = empirically_equivalent("112", "121", 8, 4)
    assert rep.verdict == DISTINCT
    w = rep.witness
    assert (w["n"], w["k"], w["r"], w["counts"]) == (5, 2, 0, [20, 21])


def test_witness_is_verifiable():
    rep = empirically_equivalent("112", "121", 8, 4)
    w = rep.witness
    for p, c in zip(rep.patterns, w["counts"]):
        assert oracle.distribution(w["n"], w["k"], p)[w["r"]] == c


def test_oracle_engine_signature_agrees():
    assert signature("1213", 6, 3, engine="oracle") == signature("1213", 6, 3)


def test_phi_map_validation():
    with pytest.raises(ValueError):
        PhiMap((2, 1, 3))
    with pytest.raises(ValueError):
        PhiMap((1, 1, 3))
    with pytest.raises(ValueError):
        phi_map((1, 1, 1), "111", (1, 2, 3))
    assert PhiMap((1, 3, 2, 4)).apply("1232") == parse_pattern("1322")
    assert find_phi("1232", "1322").apply("1232") == parse_pattern("1322")


def test_phi_map_examples():
    phi = PhiMap((1, 3, 2, 4))
    assert phi_map((1, 2, 3, 2), "1232", phi) == (1, 3, 2, 2)
    assert phi_map((1, 1, 1, 1), "1232", phi) == (1, 1, 1, 1)


@pytest.mark.parametrize("tau,tau2", [("1232", "1322"), ("1432", "1342")])
@pytest.mark.parametrize("k", [3, 4])
def test_phi_map_swaps_counts_bijectively(tau, tau2, k):
    phi = find_phi(tau, tau2)
    for n in range(7 if k == 3 else 6):
        seen = set()
        for w in words(k, n):
            v = phi_map(w, tau, phi)
            assert len(v) == len(w)
            assert Counter(v) == Counter(w)
            assert count_occurrences(v, tau2) == count_occurrences(w, tau)
            assert phi_map(v, tau, phi) == w
            seen.add(v)
        assert len(seen) == k ** n


def test_bump_target():
    assert bump_target("1213") == parse_pattern("1223")
    assert bump_target("12113") == parse_pattern("12223")
    with pytest.raises(ValueError):
        bump_target("1232")
    with pytest.raises(ValueError):
        bump_target("121213")  # 12121 overlaps itself in three letters


def test_bump_map_examples():
    assert bump_map((1, 2, 1, 3), "1213") == (1, 2, 2, 3)
    assert bump_map((3, 3, 3, 3), "1213") == (3, 3, 3, 3)


@pytest.mark.parametrize("n", range(7))
def test_bump_map_bijection_on_three_letters(n):
    tau, target = "1213", "1223"
    image = {}
    for w in words(3, n):
        v = bump_map(w, tau)
        assert count_occurrences(v, target) == count_occurrences(w, tau)
        image[v] = w
    assert len(image) == 3 ** n
    dist = Counter(count_occurrences(v, target) for v in image)
    ref = oracle.distribution(n, 3, target).as_list()
    assert [dist[r] for r in range(len(ref))] == ref


def test_bump_map_injective_on_four_letters():
    for n in range(6):
        assert len({bump_map(w, "1213") for w in words(4, n)}) == 4 ** n


def test_classify_length3():
    c = classify(3, 3)
    assert len(c.classes) == 5
    reps = ["111", "112", "212", "123", "213"]
    assert len({c.class_of(p).representative for p in reps}) == 5
    for cls in c.classes:
        assert cls.representative == min(cls.members)
    for (a, b), w in c.witnesses.items():
        assert w is not None
        da = oracle.distribution(w["n"], w["k"], a).as_list()
        db = oracle.distribution(w["n"], w["k"], b).as_list()
        assert da != db


def test_classify_length2():
    c = classify(2, 2)
    assert sorted([str(p) for p in cls.members] for cls in c.classes) == [["11"], ["12", "21"]]


def test_classify_length4():
    c = classify(4, 3, max_n=8, max_k=4)
    assert {parse_pattern(p) for p in ("1132", "1232", "1322", "1332")} <= set(c.class_of("1132").members)
    c = classify(4, 4, max_n=8, max_k=4)
    assert parse_pattern("1342") in c.class_of("1432").members


def test_classify_coarsens_symmetry_and_is_stable():
    small = classify(3, 3, max_n=6, max_k=3)
    big = classify(3, 3, max_n=7, max_k=3)
    for cls in small.classes:
        for p in cls.members:
            assert set(symmetry_class(p)) <= set(cls.members)
    part = lambda c: {frozenset(cls.members) for cls in c.classes}
    # more data can only split classes
    for cls in part(big):
        assert any(cls <= s for s in part(small))


def test_classify_guard():
    with pytest.raises(oracle.GuardExceeded):
        classify(12, 2, max_n=3, max_k=4)


def test_padding_property():
    assert empirically_equivalent("111322", "112322", 8, 3).equivalent


@pytest.mark.parametrize("pair", [("1121", "1221"), ("1232", "1322"), ("1132", "1332"),
                                  ("1432", "1342"), ("1213", "1223")])
def test_listed_pairs(pair):
    assert empirically_equivalent(*pair, max_n=8, max_k=3).equivalent
