from fractions import Fraction

import pytest

from topogen import corpus
from topogen.automaton import Automaton, isomorphism, validate
from topogen.exact import ExactComplex, FieldMismatch, Similitude, apply, compose, invert
from topogen.neighbors import IFS, NotFiniteType, coxeter_relation_check, neighbor_graph, verify_representation

F = Fraction


def C(x, y=0, N=1):
    return ExactComplex(x, y, N)


def test_invert_scaling():
    s = Similitude(C(2), C(0))
    assert apply(invert(s), C(1)) == C(F(1, 2))


def test_compose_example():
    a = C(F(1, 4), F(1, 4), 15)
    got = compose(Similitude(a, C(1, 0, 15)), Similitude(C(-1, 0, 15), C(0, 0, 15)))
    assert got == Similitude(-a, C(1, 0, 15))


def test_unit_norm():
    assert C(F(1, 4), F(1, 4), 15).norm_sq() == 1


def test_dog_algebra():
    lam = C(F(3, 2), F(1, 2), 15)
    assert lam * lam - 3 * lam + 6 == 0
    a = (lam - 1) / 2
    assert a == C(F(1, 4), F(1, 4), 15)
    assert a.norm_sq() == 1


def test_mixed_fields():
    with pytest.raises(FieldMismatch):
        C(1, 1, 3) + C(1, 1, 15)
    with pytest.raises(FieldMismatch):
        compose(Similitude.identity(3), Similitude.identity(1))


def test_conjugating_maps():
    r = Similitude(C(0, 1), C(1), conj=True)
    assert compose(r, invert(r)).is_identity()
    assert compose(invert(r), r).is_identity()
    z = C(F(2, 3), F(-1, 5))
    assert r(z) == C(0, 1) * z.conj() + 1


def test_similitude_json():
    s = Similitude(C(F(1, 4), F(1, 4), 15), C(-1, 0, 15), True)
    assert Similitude.from_json(s.to_json(), 15) == s


# -- neighbor graphs ----------------------------------------------------------------


def test_binary_neighbor_graph():
    ng = neighbor_graph(corpus.load_ifs("binary")[0])
    assert sorted(ng.automaton.non_initial()) == ["z+1", "z-1"]
    assert validate(ng.automaton).ok


@pytest.mark.parametrize("name", ["binary", "base_neg2", "tent", "gasket", "square_complete", "fractal_square",
                                  "fractal_triangle"])
def test_oracle_isomorphism(name):
    ifs, _ = corpus.load_ifs(name)
    assert isomorphism(neighbor_graph(ifs).automaton, corpus.load(name)) is not None


def test_triangle_counts():
    a = neighbor_graph(corpus.load_ifs("triangle")[0]).automaton
    assert len(a.non_initial()) == 16
    assert sum(1 for b, _, _ in a.edges if b != a.initial) == 42


@pytest.mark.parametrize("name", ["binary", "base_neg2", "tent", "gasket", "square_complete", "square_incomplete",
                                  "triangle", "dog_carpet", "fractal_square", "fractal_triangle"])
def test_stored_representations(name):
    ifs, smap = corpus.load_ifs(name)
    assert verify_representation(corpus.load(name), ifs, smap).ok


def test_binary_representation_with_stated_maps():
    ifs = [Similitude(C(F(1, 2)), C(0)), Similitude(C(F(1, 2)), C(F(1, 2)))]
    smap = {"o": Similitude.identity(1), "right": Similitude(C(1), C(1)), "left": Similitude(C(1), C(-1))}
    assert verify_representation(corpus.load("binary"), ifs, smap).ok


def test_tent_representation_with_stated_maps():
    ifs = [Similitude(C(F(1, 2)), C(0)), Similitude(C(F(-1, 2)), C(F(1, 2)))]
    smap = {"o": Similitude.identity(1), "b": Similitude(C(-1), C(1)), "c": Similitude(C(-1), C(0))}
    assert verify_representation(corpus.load("tent"), ifs, smap).ok


def test_perturbed_binary_representation():
    g = corpus.load("binary")
    ifs = [Similitude(C(F(1, 2)), C(0)), Similitude(C(F(1, 3)), C(F(1, 3)))]
    smap = {"o": Similitude.identity(1), "right": Similitude(C(1), C(1)), "left": Similitude(C(1), C(-1))}
    rep = verify_representation(g, ifs, smap)
    assert not rep.ok
    fin = [invert(f) for f in ifs]
    bad = {(b, l, c) for b, l, c in g.edges if compose(compose(fin[l[0]], smap[b]), ifs[l[1]]) != smap[c]}
    assert ("right", (1, 0), "right") in bad
    assert rep.failing_edge in bad


def test_dog_carpet():
    ifs, smap = corpus.load_ifs("dog_carpet")
    dog = corpus.load("dog_carpet")
    ng = neighbor_graph(ifs)
    big = ng.automaton
    maps = set(ng.state_map.values())
    a = C(F(1, 4), F(1, 4), 15)
    assert Similitude(C(-1, 0, 15), C(0, 0, 15)) in maps
    assert Similitude(a, C(1, 0, 15)) in maps
    # every pair accepted by the five-state automaton up to length 6 is accepted by the computed one
    layer = {(dog.initial, big.initial)}
    for _ in range(6):
        nxt = set()
        for p, q in layer:
            for lab, p2 in dog.out_edges(p):
                q2 = big.step(q, lab)
                assert q2 is not None, (p, lab)
                nxt.add((p2, q2))
        layer = nxt


def test_triangle_coxeter():
    ifs, smap = corpus.load_ifs("triangle")
    rep = coxeter_relation_check(smap["a"], smap["b"], smap["c"], invert(ifs.maps[1]))
    assert all(rep.values()), rep


def test_coxeter_degenerate_and_perturbed():
    ident = Similitude.identity(3)
    rep = coxeter_relation_check(ident, ident, ident, ident)
    assert rep["a^2=id"] and rep["b^2=id"] and rep["c^2=id"] and not rep["faithful"]
    ifs, smap = corpus.load_ifs("triangle")
    # rotate by 60 degrees (a translation would leave (ac)^3 = id intact)
    bent = compose(smap["c"], Similitude(C(F(1, 2), F(1, 2), 3), C(0, 0, 3)))
    rep = coxeter_relation_check(smap["a"], smap["b"], bent, invert(ifs.maps[1]))
    assert not rep["(ac)^3=id"]


def test_not_finite_type_guard():
    ifs, _ = corpus.load_ifs("square_complete")
    with pytest.raises(NotFiniteType):
        neighbor_graph(ifs, max_states=3)


def test_ifs_validation():
    with pytest.raises(ValueError):
        IFS(1, (Similitude(C(F(1, 2)), C(0)), Similitude(C(F(1, 3)), C(0))))
    with pytest.raises(ValueError):
        IFS(1, (Similitude(C(2), C(0)),))


@pytest.mark.parametrize("name", ["binary", "triangle", "dog_carpet", "fractal_triangle"])
def test_ifs_round_trip(name):
    ifs, _ = corpus.load_ifs(name)
    assert IFS.from_dict(ifs.to_dict()) == ifs


def test_neighbor_graph_consistency():
    ng = neighbor_graph(corpus.load_ifs("triangle")[0])
    a = ng.automaton
    ifs = corpus.load_ifs("triangle")[0]
    smap = dict(ng.state_map)
    smap.setdefault(a.initial, Similitude.identity(3))
    assert verify_representation(a, ifs, smap).ok
    for s in a.states:
        assert invert(smap[s]) == smap[a.inv(s)]
