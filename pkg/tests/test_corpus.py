import pytest

from topogen import corpus
from topogen.automaton import Automaton, validate
from topogen.multiaddress import FinalTupleAutomaton, TupleAutomaton
from topogen.neighbors import IFS

from conftest import ALL, family

# (states incl. o, labelled edges, digits, K)
GOLDEN = {
    "base_neg2": (3, 6, 2, [2]),
    "binary": (3, 6, 2, [2]),
    "disconnected": (3, 7, 3, [2]),
    "exotic": (3, 12, 3, [3]),
    "fractal_triangle": (4, 49, 13, [2]),
    "gasket": (7, 15, 3, [2]),
    "hata_complete": (4, 12, 3, [3]),
    "hata_incomplete": (3, 9, 3, [3]),
    "square_complete": (9, 36, 4, [2, 4]),
    "square_incomplete": (5, 20, 4, [2, 4]),
    "tent": (3, 6, 2, [2]),
    "tetrahedron": (13, 28, 4, [2]),
    "triangle": (4, 12, 3, [2, 4, 6, 12]),
    "weak_axiom4": (4, 8, 2, []),
    # regression values only: no independent oracle for these K-sets
    "dog_carpet": (6, 20, 5, [2, 3, 4, 6]),
    "fractal_square": (7, 50, 8, [2, 3]),
}


def test_all_fixtures_listed():
    assert set(corpus.names()) == set(GOLDEN)
    assert all(corpus.index()[n]["description"] for n in corpus.names())


@pytest.mark.parametrize("name", ALL)
def test_golden(name):
    a = corpus.load(name)
    assert (len(a.states), len(a.edges), a.m, family(name).K) == GOLDEN[name]


@pytest.mark.parametrize("name", ALL)
def test_fixture_health(name):
    a = corpus.load(name)
    assert validate(a, weak_axiom4=name == "weak_axiom4").ok
    assert Automaton.from_dict(a.to_dict()) == a


@pytest.mark.parametrize("name", [n for n in ALL if corpus.index()[n]["ifs"]])
def test_ifs_fixtures(name):
    ifs, smap = corpus.load_ifs(name)
    assert IFS.from_dict(ifs.to_dict()) == ifs
    assert smap is not None and set(smap) == set(corpus.load(name).states)


@pytest.mark.parametrize("name", ALL)
def test_tuple_round_trip(name):
    fam = family(name)
    for k in fam.candidates:
        d = fam.candidates[k].to_dict()
        assert TupleAutomaton.from_dict(d).to_dict() == d
        d = fam.automata[k].to_dict()
        assert FinalTupleAutomaton.from_dict(d).to_dict() == d


def test_unknown_fixture():
    with pytest.raises(corpus.UnknownFixture):
        corpus.load("nope")
    with pytest.raises(corpus.UnknownFixture):
        corpus.load_ifs("exotic")
