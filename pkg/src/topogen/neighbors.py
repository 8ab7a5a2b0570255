"""Neighbor maps of equal-ratio similitude IFS and their automata.

States are isometries h = f_u^{-1} f_v.  The edge (h, (i, j), h') exists when
h' = f_i^{-1} h f_j.  Maps whose translation part exceeds twice the attractor
radius are discarded; maps with no infinite continuation are trimmed.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .automaton import Automaton, trim_states
from .exact import ExactComplex, FieldMismatch, Similitude, compose, invert


class NotFiniteType(RuntimeError):
    pass


@dataclass(frozen=True)
class IFS:
    N: int
    maps: Tuple[Similitude, ...]

    def __post_init__(self):
        if not self.maps:
            raise ValueError("an IFS needs at least one map")
        for f in self.maps:
            if f.N != self.N:
                raise FieldMismatch("all IFS maps must share one field")
        ratios = {f.ratio_sq() for f in self.maps}
        if len(ratios) != 1:
            raise ValueError("IFS maps must share one contraction ratio")
        if ratios.pop() >= 1:
            raise ValueError("IFS maps must be contractions")

    @property
    def m(self) -> int:
        return len(self.maps)

    @property
    def ratio(self) -> float:
        return math.sqrt(float(self.maps[0].ratio_sq()))

    def radius(self) -> float:
        """R with the attractor inside the closed disc |z| <= R."""
        return max(abs(complex(f.beta)) for f in self.maps) / (1 - self.ratio)

    def to_dict(self):
        return {"field_N": self.N, "maps": [f.to_json() for f in self.maps]}

    @classmethod
    def from_dict(cls, raw: Mapping) -> "IFS":
        N = int(raw["field_N"])
        return cls(N, tuple(Similitude.from_json(m, N) for m in raw["maps"]))

    def compose_word(self, word: Sequence[int]) -> Similitude:
        out = Similitude.identity(self.N)
        for d in word:
            out = compose(out, self.maps[d])
        return out


@dataclass
class NeighborGraph:
    automaton: Automaton
    state_map: Dict[str, Similitude]

    def to_dict(self):
        d = self.automaton.to_dict()
        d["state_map"] = {s: f.to_json() for s, f in sorted(self.state_map.items())}
        d["field_N"] = next(iter(self.state_map.values())).N
        return d


def neighbor_graph(ifs: IFS, prune_bound: Optional[float] = None, max_states: int = 10_000) -> NeighborGraph:
    bound = 2 * ifs.radius() if prune_bound is None else prune_bound
    bound_sq = bound * bound * (1 + 1e-9) + 1e-12
    fin = [invert(f) for f in ifs.maps]
    m = ifs.m

    def successors(h: Similitude):
        for i in range(m):
            left = compose(fin[i], h)
            for j in range(m):
                yield (i, j), compose(left, ifs.maps[j])

    def keep(h: Similitude) -> bool:
        return float(h.beta.norm_sq()) <= bound_sq

    seeds = {}
    for i in range(m):
        for j in range(m):
            if i != j:
                h = compose(fin[i], ifs.maps[j])
                if not h.is_identity() and keep(h):
                    seeds[(i, j)] = h
    nodes: Dict[Tuple, Similitude] = {}
    edges: Dict[Tuple, List[Tuple[Tuple[int, int], Tuple]]] = {}
    queue = deque()
    for h in seeds.values():
        if h.key() not in nodes:
            nodes[h.key()] = h
            queue.append(h)
    while queue:
        h = queue.popleft()
        out = []
        for lab, h2 in successors(h):
            if not keep(h2):
                continue
            if h2.is_identity():
                raise NotFiniteType(f"neighbor map {h} leads back to the identity: pieces coincide")
            k2 = h2.key()
            if k2 not in nodes:
                if len(nodes) >= max_states:
                    raise NotFiniteType(f"not finite type within bound: more than {max_states} neighbor maps")
                nodes[k2] = h2
                queue.append(h2)
            out.append((lab, k2))
        edges[h.key()] = out
    alive = trim_states(nodes, lambda k: [t for _, t in edges[k]])
    order = sorted(alive, key=lambda k: _order_key(nodes[k]))
    names, used = {}, set()
    for k in order:
        base = str(nodes[k])
        name = base
        n = 2
        while name in used or name == "id":
            name = f"{base}#{n}"
            n += 1
        used.add(name)
        names[k] = name
    ident = Similitude.identity(ifs.N)
    auto_edges = [("id", (i, i), "id") for i in range(m)]
    for lab, h in seeds.items():
        if h.key() in alive:
            auto_edges.append(("id", lab, names[h.key()]))
    for k in alive:
        for lab, k2 in edges[k]:
            if k2 in alive:
                auto_edges.append((names[k], lab, names[k2]))
    inverse = {}
    for k in alive:
        hk = invert(nodes[k]).key()
        if hk not in alive:
            raise NotFiniteType(f"inverse of neighbor map {nodes[k]} was not retained")
        inverse[names[k]] = names[hk]
    a = Automaton(m, ("id",) + tuple(names[k] for k in order), "id", inverse, tuple(auto_edges))
    state_map = {"id": ident, **{names[k]: nodes[k] for k in alive}}
    return NeighborGraph(a, state_map)


def _order_key(h: Similitude):
    b = complex(h.beta)
    return (h.conj, round(abs(b), 12), h.key())


@dataclass
class RepresentationCheck:
    ok: bool
    failing_edge: Optional[Tuple[str, Tuple[int, int], str]] = None
    reason: str = ""

    def to_dict(self):
        return {"ok": self.ok, "failing_edge": list(self.failing_edge) if self.failing_edge else None, "reason": self.reason}


def verify_representation(g: Automaton, ifs, state_map: Mapping[str, Similitude]) -> RepresentationCheck:
    """``ifs`` is an IFS or any sequence of similitudes (ratios need not agree)."""
    maps = tuple(ifs.maps if isinstance(ifs, IFS) else ifs)
    if g.m != len(maps):
        return RepresentationCheck(False, None, f"automaton has {g.m} digits, IFS has {len(maps)} maps")
    missing = [s for s in g.states if s not in state_map]
    if missing:
        return RepresentationCheck(False, None, f"state map misses {missing}")
    N = maps[0].N
    for s, f in list(state_map.items()) + [(str(k), f) for k, f in enumerate(maps)]:
        if f.N != N:
            raise FieldMismatch(f"{s} uses a different field")
    if not state_map[g.initial].is_identity():
        return RepresentationCheck(False, None, "initial state must map to the identity")
    fin = [invert(f) for f in maps]
    for b, (i, j), c in g.edges:
        expect = compose(compose(fin[i], state_map[b]), maps[j])
        if expect != state_map[c]:
            return RepresentationCheck(False, (b, (i, j), c), f"f_{i}^-1 ∘ {state_map[b]} ∘ f_{j} = {expect}, not {state_map[c]}")
    for s in g.states:
        if invert(state_map[s]) != state_map[g.inv(s)]:
            return RepresentationCheck(False, None, f"map of {g.inv(s)} is not the inverse of the map of {s}")
    return RepresentationCheck(True)


def coxeter_relation_check(a: Similitude, b: Similitude, c: Similitude, g: Similitude) -> Dict[str, bool]:
    """Coxeter relations of the reflection group and the action of g on it."""
    ident = Similitude.identity(a.N)
    gi = invert(g)
    conj_by_g = lambda x: compose(compose(g, x), gi)
    word = lambda *xs: _chain(ident, xs)
    ac, cb = word(a, c), word(c, b)
    report = {
        "a^2=id": word(a, a) == ident,
        "b^2=id": word(b, b) == ident,
        "c^2=id": word(c, c) == ident,
        "ab=ba": word(a, b) == word(b, a),
        "(ac)^3=id": word(ac, ac, ac) == ident,
        "(cb)^6=id": word(*([cb] * 6)) == ident,
        "gcg^-1=b": conj_by_g(c) == b,
        "gag^-1=cbc": conj_by_g(a) == word(c, b, c),
        "gbg^-1=cac": conj_by_g(b) == word(c, a, c),
        "cac=aca": word(c, a, c) == word(a, c, a),
    }
    report["faithful"] = len({x.key() for x in (a, b, c, ident)}) == 4
    return report


def _chain(ident, xs):
    out = ident
    for x in xs:
        out = compose(out, x)
    return out
