"""Piece adjacency from the IFS against the word adjacency of the atoms."""

import itertools
from fractions import Fraction

import pytest

shapely = pytest.importorskip("shapely")
from shapely.geometry import LineString, Polygon

from topogen import corpus
from topogen.approximation import word_graph
from topogen.exact import ExactComplex

from conftest import space

TOL = 1e-9


def hull(name, N):
    half = Fraction(1, 2)
    pts = {
        "binary": [(0, 0), (1, 0)],
        "square_complete": [(0, 0), (1, 0), (1, 1), (0, 1)],
        "gasket": [(0, 0), (1, 0), (half, half)],
    }[name]
    # for the gasket the y entry is the coefficient of sqrt(3) i
    return [ExactComplex(x, y, N) for x, y in pts]


def pieces(name, n):
    ifs, _ = corpus.load_ifs(name)
    corners = hull(name, ifs.N)
    out = {}
    for w in itertools.product(range(ifs.m), repeat=n):
        f = ifs.compose_word(w)
        pts = [complex(f(z)) for z in corners]
        xy = [(p.real, p.imag) for p in pts]
        out[w] = Polygon(xy) if len(xy) > 2 else LineString(xy)
    return out


def geometric_pairs(name, n):
    ps = pieces(name, n)
    return {frozenset((u, v)) for u, v in itertools.combinations(sorted(ps), 2) if ps[u].distance(ps[v]) <= TOL}


def atom_pairs(name, n):
    sp = space(name, n)
    return {frozenset(p) for y in sp.atoms for p in itertools.combinations(sorted(y), 2)}


@pytest.mark.parametrize("name", ["binary", "square_complete", "gasket"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_piece_adjacency_matches_atoms(name, n):
    geo = geometric_pairs(name, n)
    assert geo == atom_pairs(name, n)
    _, edges = word_graph(corpus.load(name), n)
    assert geo == {frozenset(e) for e in edges}
