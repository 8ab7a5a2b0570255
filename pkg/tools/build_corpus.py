"""Regenerate the JSON fixtures in src/topogen/data.

Hand-drawn automata are written out directly; square-type and triangle-type
fixtures with an IFS are produced by the neighbor-map recursion so that the
stored automaton is exactly what the IFS generates.
"""

import json
import sys
from fractions import Fraction as F
from pathlib import Path

from topogen.automaton import Automaton, validate
from topogen.exact import ExactComplex, Similitude, compose, invert
from topogen.neighbors import IFS, neighbor_graph, verify_representation

OUT = Path(__file__).resolve().parents[1] / "src" / "topogen" / "data"


def build(m, inverse, groups, initial="o", diagonal=True, weak=False):
    """Automaton from edge groups; mirror edges are added automatically."""
    inverse = {**inverse, **{v: k for k, v in inverse.items()}}
    inv = lambda s: s if s == initial else inverse.get(s, s)
    edges = set()
    if diagonal:
        edges |= {(initial, (i, i), initial) for i in range(m)}
    for b, c, labs in groups:
        for i, j in labs:
            edges.add((b, (i, j), c))
            edges.add((inv(b), (j, i), inv(c)))
    states = {initial} | {b for b, _, _ in edges} | {c for _, _, c in edges}
    full_inv = {s: inv(s) for s in states if s != initial}
    return Automaton(m, tuple(states), initial, full_inv, tuple(edges), weak)


def sim(alpha, beta, N, conj=False):
    return Similitude(ExactComplex(*alpha, N), ExactComplex(*beta, N), conj)


def real_ifs(pairs, N=1):
    """IFS of maps z -> a z + b with rational a, b."""
    return IFS(N, tuple(sim((a, 0), (b, 0), N) for a, b in pairs))


FIXTURES = {}
NOTES = {}


def fixture(name, note, automaton, ifs=None, state_map=None):
    rep = validate(automaton)
    if not rep.ok:
        sys.exit(f"{name}: {rep.to_dict()}")
    if ifs is not None and state_map is not None:
        check = verify_representation(automaton, ifs, state_map)
        if not check.ok:
            sys.exit(f"{name}: representation fails: {check.reason}")
    FIXTURES[name] = (automaton, ifs, state_map)
    NOTES[name] = note


def from_neighbors(ifs, rename=None):
    ng = neighbor_graph(ifs)
    a, smap = ng.automaton, ng.state_map
    if rename:
        full = {s: rename.get(s, s) for s in a.states}
        a = a.relabel_states(full)
        smap = {full[s]: f for s, f in smap.items()}
    return a, smap


def main():
    half = F(1, 2)

    # interval examples
    binary = build(2, {"right": "left"}, [("o", "right", [(0, 1)]), ("right", "right", [(1, 0)])])
    fixture("binary", "binary numbers, double addresses 0(1) ~ 1(0) (Fig. 1)", binary,
            real_ifs([(half, 0), (half, half)]),
            {"o": Similitude.identity(1), "right": sim((1, 0), (1, 0), 1), "left": sim((1, 0), (-1, 0), 1)})

    base_neg2 = build(2, {"c": "b"}, [("o", "c", [(0, 1)]), ("c", "b", [(0, 1)])])
    fixture("base_neg2", "number system with base -2 (Fig. 2a)", base_neg2,
            real_ifs([(-half, 0), (-half, half)]),
            {"o": Similitude.identity(1), "c": sim((1, 0), (-1, 0), 1), "b": sim((1, 0), (1, 0), 1)})

    tent = build(2, {}, [("o", "b", [(0, 1)]), ("b", "c", [(1, 1)]), ("c", "c", [(0, 0)])])
    fixture("tent", "symbolic dynamics of the tent map (Fig. 2b)", tent,
            real_ifs([(half, 0), (-half, half)]),
            {"o": Similitude.identity(1), "b": sim((-1, 0), (1, 0), 1), "c": sim((-1, 0), (0, 0), 1)})

    fixture("disconnected", "binary automaton with an unused third digit (Fig. 3)",
            build(3, {"right": "left"}, [("o", "right", [(0, 1)]), ("right", "right", [(1, 0)])]))

    fixture("hata_incomplete", "Hata tree, incomplete automaton (Fig. 4 left)",
            build(3, {"right": "left"}, [("o", "right", [(0, 1), (0, 2)]), ("right", "right", [(1, 0)])]))

    fixture("hata_complete", "Hata tree, complete automaton (Fig. 4 right)",
            build(3, {"right": "left"}, [("o", "right", [(0, 1), (0, 2)]), ("right", "right", [(1, 0)]),
                                         ("o", "z", [(1, 2)]), ("z", "z", [(0, 0)])]))

    fixture("exotic", "triple addresses v0w ~ v1w ~ v2w, not planar (Fig. 5)",
            build(3, {}, [("o", "b", [(0, 1), (0, 2), (1, 2)]), ("b", "c", [(1, 1)]), ("c", "c", [(0, 0), (2, 2)])]))

    fixture("weak_axiom4", "graph-directed example with V0 = {o, c}; weak axiom 4 (Fig. 6)",
            build(2, {"right": "left"}, [("o", "o", [(0, 0)]), ("o", "c", [(1, 1)]), ("c", "c", [(0, 0), (1, 1)]),
                                         ("c", "right", [(0, 1)]), ("right", "right", [(1, 0)])],
                  diagonal=False, weak=True))

    # gasket and tetrahedron: states ij, edge o -(i,j)-> ij and loop (j,i)
    def simplex(m):
        groups = []
        for i in range(m):
            for j in range(i + 1, m):
                groups += [("o", f"s{i}{j}", [(i, j)]), (f"s{i}{j}", f"s{i}{j}", [(j, i)])]
        return build(m, {f"s{i}{j}": f"s{j}{i}" for i in range(m) for j in range(m) if i != j}, groups)

    omega = (half, half)  # 1/2 + 1/2 i sqrt(3)
    gasket_ifs = IFS(3, (sim((half, 0), (0, 0), 3), sim((half, 0), (half, 0), 3), sim((half, 0), (F(1, 4), F(1, 4)), 3)))
    pts = [ExactComplex(0, 0, 3), ExactComplex(1, 0, 3), ExactComplex(*omega, 3)]
    gmap = {"o": Similitude.identity(3)}
    for i in range(3):
        for j in range(3):
            if i != j:
                gmap[f"s{i}{j}"] = Similitude(ExactComplex(1, 0, 3), pts[j] - pts[i])
    fixture("gasket", "Sierpinski gasket, 6 states (Fig. b1)", simplex(3), gasket_ifs, gmap)
    fixture("tetrahedron", "Sierpinski tetrahedron, 12 states, automaton only (Fig. b1)", simplex(4))

    # squares over Q(i); digit d = x + 2y
    sq = IFS(1, tuple(sim((half, 0), (F(x, 2), F(y, 2)), 1) for y in range(2) for x in range(2)))
    compass = {(1, 0): "E", (-1, 0): "W", (0, 1): "N", (0, -1): "S",
               (1, 1): "NE", (-1, -1): "SW", (-1, 1): "NW", (1, -1): "SE"}

    def compass_names(ifs, k):
        ng = neighbor_graph(ifs)
        ren = {}
        for s, f in ng.state_map.items():
            if s != "id":
                v = f.beta
                ren[s] = compass[(int(v.x * k), int(v.y * k))]
        ren["id"] = "o"
        return ng, ren

    ng, ren = compass_names(sq, 1)
    square, smap = from_neighbors(sq, ren)
    fixture("square_complete", "2x2 square, complete automaton with 8 neighbor states (Fig. b2)", square, sq, smap)

    fixture("square_incomplete", "2x2 square, incomplete automaton with N, E, S, W (Fig. 'figsquare')",
            build(4, {"E": "W", "N": "S"}, [("o", "E", [(0, 1), (2, 3)]), ("E", "E", [(1, 0), (3, 2)]),
                                             ("o", "N", [(0, 2), (1, 3)]), ("N", "N", [(2, 0), (3, 1)])]),
            sq, {"o": Similitude.identity(1), **{k: smap[k] for k in ("N", "E", "S", "W")}})

    # fractal square: 3x3 grid, digits chosen so NW and SE never occur
    third = F(1, 3)
    cells = FRACTAL_SQUARE_CELLS
    fsq = IFS(1, tuple(sim((third, 0), (F(x, 3), F(y, 3)), 1) for x, y in cells))
    ng, ren = compass_names(fsq, 1)
    a, smap = from_neighbors(fsq, ren)
    fixture("fractal_square", f"3x3 fractal square with cells {cells}; no NW/SE states (Fig. b3)", a, fsq, smap)

    # fractal triangle: 4x4 triangular grid without its three corner triangles
    q = F(1, 4)
    maps = []
    for b in range(4):
        for x in range(4 - b):
            if (x, b) in ((0, 0), (3, 0), (0, 3)):
                continue
            maps.append(sim((q, 0), (q * x + q * b * half, q * b * half), 3))
    for b in range(3):
        for x in range(3 - b):
            maps.append(sim((-q, 0), (q * (x + 1) + q * (b + 1) * half, q * (b + 1) * half), 3))
    ftri = IFS(3, tuple(maps))
    a, smap = from_neighbors(ftri, {"id": "o", "-z+1": "bottom", "-z+(1/2+1/2i√3)": "left",
                                   "-z+(3/2+1/2i√3)": "right"})
    fixture("fractal_triangle", "fractal triangle with 13 digits and 3 states (Fig. b3)", a, ftri, smap)

    # triangle: 30-60-90 triangle A=3, B=sqrt3 i, C=0 split into BCD, BDM, ADM
    N = 3
    f0 = Similitude(ExactComplex(0, third, N), ExactComplex(0, 0, N), True)
    f1 = Similitude(ExactComplex(-half, F(1, 6), N), ExactComplex(F(3, 2), half, N))
    f2 = Similitude(ExactComplex(half, -F(1, 6), N), ExactComplex(F(3, 2), half, N), True)
    tri_ifs = IFS(N, (f0, f1, f2))
    g_inv = invert(f1)
    c = compose(g_inv, f0)
    a_ = compose(g_inv, f2)
    b_ = compose(compose(g_inv, c), f1)
    tri = build(3, {}, [("o", "c", [(0, 1)]), ("o", "a", [(1, 2)]), ("c", "b", [(1, 1), (2, 2)]),
                        ("a", "b", [(0, 0)]), ("b", "a", [(0, 0)]), ("b", "c", [(2, 2)])])
    fixture("triangle", "30-60-90 triangle, incomplete 3-state automaton (Fig. 7)", tri, tri_ifs,
            {"o": Similitude.identity(N), "a": a_, "b": b_, "c": c})

    # dog carpet over Q(sqrt(-15)); digits 1..5 of the drawing are 0..4 here
    N = 15
    lam = ExactComplex(F(3, 2), half, N)
    al = ExactComplex(F(1, 4), F(1, 4), N)
    one, zero = ExactComplex(1, 0, N), ExactComplex(0, 0, N)
    hs = [Similitude(al, one), Similitude(al, -one), Similitude.identity(N),
          Similitude(al.conj(), -al.conj()), Similitude(-al.conj(), -al.conj())]
    g = Similitude(lam, zero)
    fs = tuple(compose(invert(g), h) for h in hs)
    dog_ifs = IFS(N, fs)
    L = lambda i, j: (i - 1, j - 1)
    dog = build(5, {"p": "pm", "q": "qm"}, [
        ("o", "p", [L(3, 1), L(4, 3)]), ("o", "h", [L(4, 5)]),
        ("p", "p", [L(1, 2)]), ("h", "h", [L(3, 3), L(1, 2)]),
        ("p", "q", [L(4, 5)]), ("q", "pm", [L(2, 5)])])
    p = hs[0]
    qmap = compose(compose(invert(fs[3]), p), fs[4])
    fixture("dog_carpet", "dog carpet, 5-state incomplete automaton over Q(sqrt(-15)) (Fig. 9)", dog, dog_ifs,
            {"o": Similitude.identity(N), "p": p, "pm": invert(p), "h": Similitude(-one, zero),
             "q": qmap, "qm": invert(qmap)})

    OUT.mkdir(parents=True, exist_ok=True)
    index = {}
    for name, (a, ifs, smap) in sorted(FIXTURES.items()):
        d = a.to_dict()
        d["description"] = NOTES[name]
        (OUT / f"{name}.json").write_text(json.dumps(d, indent=1) + "\n")
        entry = {"description": NOTES[name], "ifs": ifs is not None}
        if ifs is not None:
            di = ifs.to_dict()
            if smap is not None:
                di["state_map"] = {s: f.to_json() for s, f in sorted(smap.items())}
            (OUT / f"{name}.ifs.json").write_text(json.dumps(di, indent=1) + "\n")
        index[name] = entry
    (OUT / "index.json").write_text(json.dumps(index, indent=1) + "\n")
    print(f"wrote {len(FIXTURES)} fixtures to {OUT}")


FRACTAL_SQUARE_CELLS = ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2))

if __name__ == "__main__":
    main()
