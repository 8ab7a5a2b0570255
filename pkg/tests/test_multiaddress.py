import itertools

import pytest

from topogen import corpus
from topogen.address import Address
from topogen.analysis import class_of
from topogen.multiaddress import (
    FinalTupleAutomaton,
    G2Table,
    TupleAutomaton,
    build_G3,
    build_tuple_automaton,
    completeness_split,
    duplicate_collapse,
    extend,
)

from conftest import family

A = Address.parse


def lassos(m, size):
    seen = set()
    for total in range(1, size + 1):
        for per_len in range(1, total + 1):
            for digits in itertools.product(range(m), repeat=total):
                a = Address(digits[:total - per_len], digits[total - per_len:])
                if a not in seen:
                    seen.add(a)
                    yield a


def class_sizes(name, size=4):
    a = corpus.load(name)
    return {s: class_of(a, s) for s in lassos(a.m, size)}


@pytest.mark.parametrize("name,K", [
    ("binary", [2]),
    ("tent", [2]),
    ("base_neg2", [2]),
    ("gasket", [2]),
    ("square_complete", [2, 4]),
    ("square_incomplete", [2, 4]),
    ("hata_complete", [3]),
    ("hata_incomplete", [3]),
    ("exotic", [3]),
    ("triangle", [2, 4, 6, 12]),
])
def test_k_sets(name, K):
    assert family(name).K == K


def test_binary_has_no_triples():
    g3 = build_G3(corpus.load("binary"))
    assert g3.empty
    assert extend(g3, corpus.load("binary")).empty
    assert all(c.size <= 2 for c in class_sizes("binary").values())


def test_exotic_triples_are_distinct():
    sizes = {c.size for c in class_sizes("exotic").values()}
    assert sizes == {1, 3}
    assert not build_G3(corpus.load("exotic")).empty


def test_triangle_six_tuple():
    tri = corpus.load("triangle")
    fam = family("triangle")
    cols = ["221100", "100110"]
    six = [Address((int(cols[0][k]), int(cols[1][k])), (2,)) for k in range(6)]
    assert {str(s) for s in six} == {"21(2)", "20(2)", "10(2)", "11(2)", "01(2)", "00(2)"}
    assert fam.automata[6].accepts(six)
    assert fam.automata[6].accepts(list(reversed(six)))
    assert not fam.automata[6].accepts(six[:5] + [six[0]])
    assert class_of(tri, six[0]).size == 6
    for sub in itertools.combinations(six, 4):
        assert not fam.automata[4].accepts(list(sub))


def test_triangle_pair_class():
    fam = family("triangle")
    pair = [A("1(0)"), A("2(0)")]
    assert {str(t) for t in class_of(corpus.load("triangle"), pair[0]).members} == {"1(0)", "2(0)"}
    assert fam.automata[2].accepts(pair)
    assert not any(fam.automata[k].accepts(pair) for k in (4, 6, 12))


@pytest.mark.parametrize("name", ["binary", "square_incomplete", "hata_complete", "exotic", "triangle"])
def test_sound_and_maximal_on_small_lassos(name):
    fam = family(name)
    for s, cls in class_sizes(name, 3).items():
        k = cls.size
        if k == 1:
            continue
        assert k in fam.K, (str(s), k)
        members = list(cls.members)
        assert fam.automata[k].accepts(members), [str(t) for t in members]
        # a proper sub-tuple is never complete
        if k - 1 in fam.automata:
            assert not fam.automata[k - 1].accepts(members[:-1])


def test_rejects_inequivalent_pair():
    fam = family("binary")
    assert not fam.automata[2].accepts([A("0(1)"), A("1(1)")])
    assert not fam.automata[2].accepts([A("0(1)"), A("0(1)")])


def test_duplicate_collapse_idempotent():
    g2 = corpus.load("triangle")
    g3 = build_G3(g2)
    once = duplicate_collapse(g3)
    twice = duplicate_collapse(once)
    assert once.to_dict() == twice.to_dict()


def test_extend_of_empty_is_empty():
    g2 = corpus.load("binary")
    empty = build_G3(g2)
    assert empty.empty and extend(empty, g2).empty
    final, rest = completeness_split(empty)
    assert final.empty and rest == []


def test_tuple_json_round_trip():
    fam = family("triangle")
    for k, cand in fam.candidates.items():
        assert TupleAutomaton.from_dict(cand.to_dict()).to_dict() == cand.to_dict()
        fin = fam.automata[k]
        back = FinalTupleAutomaton.from_dict(fin.to_dict())
        assert back.to_dict() == fin.to_dict()
        assert back.nodes == fin.nodes


def test_summary_counts():
    s = family("square_incomplete").summary()
    assert s["K"] == [2, 4]
    assert set(s["arities"]) == {"2", "3", "4"}
