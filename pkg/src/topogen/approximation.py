"""Finite topological approximations X^n built from tuple automata.

A point of X^n is identified with its word-set W: a word point is {w} for
w in D^n and is open; an atom is the set of distinct length-n prefixes seen
along a run of a final tuple automaton, with at least two words.  The
minimal open neighbourhood of an atom y is {y}, its words, and all atoms
whose word-set is strictly contained in W_y.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from .address import format_word, parse_word
from .automaton import Automaton

Word = Tuple[int, ...]
Point = FrozenSet[Word]

DEFAULT_GUARD = 10 ** 6


class SpaceGuardExceeded(ValueError):
    pass


class ProjectionError(ValueError):
    pass


def point_name(p: Point) -> str:
    if len(p) == 1:
        return format_word(next(iter(p)))
    return "{" + ",".join(format_word(w) for w in sorted(p)) + "}"


@dataclass
class FiniteSpace:
    level: int
    m: int
    points: List[Point]
    nbhd: Dict[Point, FrozenSet[Point]]

    def __contains__(self, p) -> bool:
        return p in self.nbhd

    @property
    def words(self) -> List[Point]:
        return [p for p in self.points if len(p) == 1]

    @property
    def atoms(self) -> List[Point]:
        return [p for p in self.points if len(p) > 1]

    def comparable(self, x: Point, y: Point) -> bool:
        return x in self.nbhd[y] or y in self.nbhd[x]

    def adjacency(self) -> Dict[Point, Set[Point]]:
        adj: Dict[Point, Set[Point]] = {p: set() for p in self.points}
        for y, U in self.nbhd.items():
            for x in U:
                if x != y:
                    adj[x].add(y)
                    adj[y].add(x)
        return adj

    def point(self, token: str) -> Point:
        """Parse a word, a braced word-set, or a word with one 'Y' standing for every digit."""
        token = token.strip()
        if token.startswith("{"):
            p = frozenset(parse_word(t) for t in token[1:-1].split(","))
        elif "Y" in token:
            if token.count("Y") != 1:
                raise ValueError(f"point {token!r} has more than one Y")
            a, b = token.split("Y")
            p = frozenset(parse_word(a) + (d,) + parse_word(b) for d in range(self.m))
        else:
            p = frozenset([parse_word(token)])
        if p not in self.nbhd:
            raise KeyError(f"point {token} is not in the level-{self.level} space")
        return p

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "m": self.m,
            "points": [
                {"name": point_name(p), "kind": "word" if len(p) == 1 else "atom",
                 "words": [format_word(w) for w in sorted(p)], "arity": len(p)}
                for p in self.points
            ],
            "neighborhoods": {point_name(p): sorted(point_name(x) for x in self.nbhd[p]) for p in self.points},
        }

    @classmethod
    def from_dict(cls, raw: Mapping) -> "FiniteSpace":
        by_name = {d["name"]: frozenset(parse_word(w) for w in d["words"]) for d in raw["points"]}
        points = [by_name[d["name"]] for d in raw["points"]]
        nbhd = {by_name[k]: frozenset(by_name[x] for x in v) for k, v in raw["neighborhoods"].items()}
        return cls(int(raw["level"]), int(raw["m"]), points, nbhd)

    def __eq__(self, other):
        return isinstance(other, FiniteSpace) and (self.level, self.m, self.nbhd) == (other.level, other.m, other.nbhd)


def _sort_key(p: Point):
    return (len(p) > 1, len(p), sorted(p))


def space_from_atoms(level: int, m: int, atoms: Iterable[Point]) -> FiniteSpace:
    words = [frozenset([w]) for w in itertools.product(range(m), repeat=level)]
    atoms = sorted({a for a in atoms if len(a) > 1}, key=_sort_key)
    nbhd: Dict[Point, FrozenSet[Point]] = {w: frozenset([w]) for w in words}
    atom_set = set(atoms)
    for y in atoms:
        U = {y} | {frozenset([w]) for w in y}
        if 2 ** len(y) < len(atoms):
            # enumerate proper sub-word-sets directly
            ys = sorted(y)
            for r in range(2, len(ys)):
                U.update(z for z in map(frozenset, itertools.combinations(ys, r)) if z in atom_set)
        else:
            U.update(z for z in atoms if len(z) < len(y) and z < y)
        nbhd[y] = frozenset(U)
    return FiniteSpace(level, m, words + atoms, nbhd)


def build_space(family, n: int, guard: int = DEFAULT_GUARD) -> FiniteSpace:
    if n < 1:
        raise ValueError("level must be at least 1")
    m = family.g2.m
    if m ** n > guard:
        raise SpaceGuardExceeded(f"level {n} has {m ** n} word points; guard is {guard}")
    atoms: Set[Point] = set()
    for k in family.K:
        atoms |= family.automata[k].word_sets(n)
    return space_from_atoms(n, m, atoms)


# -- projections ------------------------------------------------------------------


@dataclass
class Projection:
    source: FiniteSpace
    target: FiniteSpace
    mapping: Dict[Point, Point]

    def __call__(self, p: Point) -> Point:
        return self.mapping[p]

    def continuity_failures(self) -> List[Point]:
        bad = []
        for p in self.source.points:
            img = {self.mapping[x] for x in self.source.nbhd[p]}
            if not img <= self.target.nbhd[self.mapping[p]]:
                bad.append(p)
        return bad

    @property
    def continuous(self) -> bool:
        return not self.continuity_failures()


def truncate(p: Point, n: int) -> Point:
    return frozenset(w[:n] for w in p)


def project(upper: FiniteSpace, lower: FiniteSpace) -> Projection:
    if upper.level != lower.level + 1 or upper.m != lower.m:
        raise ProjectionError(f"cannot project level {upper.level} onto level {lower.level}")
    mapping = {}
    for p in upper.points:
        img = truncate(p, lower.level)
        if img not in lower:
            raise ProjectionError(f"image {point_name(img)} of {point_name(p)} is missing at level {lower.level}")
        mapping[p] = img
    proj = Projection(upper, lower, mapping)
    bad = proj.continuity_failures()
    if bad:
        raise ProjectionError(f"projection is not continuous at {point_name(bad[0])}")
    return proj


# -- topology probes --------------------------------------------------------------


def _components(points: Iterable[Point], adj: Mapping[Point, Set[Point]], removed=frozenset()) -> List[List[Point]]:
    seen: Set[Point] = set(removed)
    comps = []
    for p in points:
        if p in seen:
            continue
        comp, todo = [], [p]
        seen.add(p)
        while todo:
            x = todo.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        comps.append(sorted(comp, key=_sort_key))
    return comps


def connectedness(space: FiniteSpace) -> List[List[Point]]:
    """Components of the comparability graph."""
    return _components(space.points, space.adjacency())


def is_connected(space: FiniteSpace) -> bool:
    return len(connectedness(space)) == 1


def cut_point_evidence(space: FiniteSpace, point: Point) -> bool:
    """Does removing the point disconnect the level-n space?  Evidence only."""
    if point not in space:
        raise KeyError(f"{point_name(point)} is not a point of the space")
    adj = space.adjacency()
    return len(_components(space.points, adj, removed={point})) > 1


def component_size_probe(family, n: int, guard: int = DEFAULT_GUARD) -> List[dict]:
    out = []
    for level in range(1, n + 1):
        sp = build_space(family, level, guard)
        comps = connectedness(sp)
        sizes = sorted((len(c) for c in comps), reverse=True)
        word_sizes = sorted((sum(1 for p in c if len(p) == 1) for c in comps), reverse=True)
        out.append({"level": level, "points": len(sp.points), "components": len(comps),
                    "max_component": sizes[0], "max_component_words": word_sizes[0]})
    return out


# -- Kuratowski witnesses ---------------------------------------------------------


@dataclass
class WitnessReport:
    ok: bool
    pattern: Optional[str] = None
    problems: List[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"ok": self.ok, "pattern": self.pattern, "problems": self.problems}


def _pattern(vertices: Sequence[Point], pairs: List[Tuple[int, int]]) -> Optional[str]:
    n = len(vertices)
    es = {frozenset(e) for e in pairs}
    if len(es) != len(pairs) or any(len(e) != 2 for e in es):
        return None
    if n == 5 and len(es) == 10:
        return "K5"
    if n == 6 and len(es) == 9:
        for left in itertools.combinations(range(6), 3):
            right = [v for v in range(6) if v not in left]
            if all(frozenset((a, b)) in es for a in left for b in right):
                return "K3,3"
    return None


def verify_kuratowski_witness(space: FiniteSpace, vertices: Sequence[Point], arcs: Sequence[Sequence[Point]]) -> WitnessReport:
    problems = []
    vset = set(vertices)
    if len(vset) != len(vertices):
        problems.append("repeated vertex")
    for v in vertices:
        if v not in space:
            problems.append(f"vertex {point_name(v)} is not in the space")
    pairs = []
    interiors: Dict[Point, int] = {}
    for k, arc in enumerate(arcs):
        tag = f"arc {k} ({point_name(arc[0])} .. {point_name(arc[-1])})" if arc else f"arc {k}"
        if len(arc) < 2:
            problems.append(f"{tag}: fewer than two points")
            continue
        missing = [p for p in arc if p not in space]
        if missing:
            problems.append(f"{tag}: {point_name(missing[0])} is not in the space")
            continue
        if arc[0] not in vset or arc[-1] not in vset:
            problems.append(f"{tag}: endpoints must be witness vertices")
        for x, y in zip(arc, arc[1:]):
            if not space.comparable(x, y):
                problems.append(f"{tag}: {point_name(x)} and {point_name(y)} are not comparable")
                break
        if not any(len(p) == 1 for p in arc):
            problems.append(f"{tag}: contains no word point")
        inner = arc[1:-1]
        if len(set(inner)) != len(inner):
            problems.append(f"{tag}: repeats a point")
        for p in inner:
            if p in vset:
                problems.append(f"{tag}: passes through vertex {point_name(p)}")
            elif p in interiors:
                problems.append(f"{tag}: meets arc {interiors[p]} at {point_name(p)}")
            else:
                interiors[p] = k
        if arc[0] in vset and arc[-1] in vset:
            pairs.append((vertices.index(arc[0]), vertices.index(arc[-1])))
    pattern = _pattern(vertices, pairs) if not problems else None
    if not problems and pattern is None:
        problems.append("arcs do not form K5 or K3,3")
    return WitnessReport(not problems, pattern, problems)


# -- word graphs --------------------------------------------------------------------


def word_graph(a: Automaton, n: int, guard: int = 20_000) -> Tuple[List[Word], List[Tuple[Word, Word]]]:
    """Vertices D^n; an edge joins u != v when (u, v) is accepted."""
    if a.m ** n > guard:
        raise SpaceGuardExceeded(f"level {n} has {a.m ** n} words; guard is {guard}")
    # extend accepted pairs letter by letter
    layer = {((), (), a.initial)}
    for _ in range(n):
        layer = {(u + (i,), v + (j,), c) for u, v, q in layer for (i, j), c in a.out_edges(q)}
    verts = list(itertools.product(range(a.m), repeat=n))
    edges = sorted({(u, v) for u, v, _ in layer if u < v})
    return verts, edges
