"""Topology-generating automata over pair labels.

An automaton has a digit alphabet ``0..m-1``, an initial state, an involution
on states and a finite set of labelled edges ``(source, (i, j), target)``.  A
pair of words or sequences is accepted when the label-determined path from the
initial state exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .address import Address

Label = Tuple[int, int]
Edge = Tuple[str, Label, str]


class StructuralError(ValueError):
    """The description does not even describe a graph over the alphabet."""

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class Automaton:
    m: int
    states: Tuple[str, ...]
    initial: str
    inverse: Mapping[str, str]
    edges: Tuple[Edge, ...]
    weak_axiom4: bool = False
    _delta: Dict[Tuple[str, Label], str] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        states = tuple(sorted(set(self.states), key=lambda s: (s != self.initial, s)))
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "inverse", dict(sorted(self.inverse.items())))
        edges = tuple(sorted(set((b, (int(l[0]), int(l[1])), c) for b, l, c in self.edges)))
        object.__setattr__(self, "edges", edges)
        delta = {}
        for b, lab, c in edges:
            delta.setdefault((b, lab), c)
        object.__setattr__(self, "_delta", delta)

    def __hash__(self):
        return hash((self.m, self.states, self.initial, self.edges))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_dict(cls, raw: Mapping) -> "Automaton":
        problems = []
        try:
            m = int(raw["m"])
            states = [str(s) for s in raw["states"]]
            initial = str(raw["initial"])
            inverse = {str(k): str(v) for k, v in raw.get("inverse", {}).items()}
            groups = raw["edges"]
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError([f"malformed automaton description: {exc!r}"]) from None
        if m < 1:
            problems.append(f"alphabet size must be positive, got {m}")
        known = set(states)
        if initial not in known:
            problems.append(f"initial state {initial!r} is not listed")
        for k, v in inverse.items():
            for s in (k, v):
                if s not in known:
                    problems.append(f"inverse refers to unknown state {s!r}")
        edges = []
        for g in groups:
            src, dst = str(g.get("from")), str(g.get("to"))
            for s in (src, dst):
                if s not in known:
                    problems.append(f"edge refers to unknown state {s!r}")
            for lab in g.get("labels", []):
                if len(lab) != 2 or not all(isinstance(d, int) and 0 <= d < m for d in lab):
                    problems.append(f"label {lab!r} on edge {src}->{dst} is outside the alphabet")
                    continue
                edges.append((src, (lab[0], lab[1]), dst))
        if problems:
            raise StructuralError(problems)
        return cls(m, tuple(states), initial, inverse, tuple(edges), bool(raw.get("weak_axiom4", False)))

    def to_dict(self) -> dict:
        groups: Dict[Tuple[str, str], List[List[int]]] = {}
        for b, (i, j), c in self.edges:
            groups.setdefault((b, c), []).append([i, j])
        out = {
            "m": self.m,
            "states": list(self.states),
            "initial": self.initial,
            "inverse": dict(self.inverse),
            "edges": [{"from": b, "to": c, "labels": labs} for (b, c), labs in sorted(groups.items())],
        }
        if self.weak_axiom4:
            out["weak_axiom4"] = True
        return out

    # -- queries ------------------------------------------------------------

    @property
    def digits(self) -> range:
        return range(self.m)

    def step(self, state: str, label: Label) -> Optional[str]:
        return self._delta.get((state, label))

    def out_edges(self, state: str) -> List[Tuple[Label, str]]:
        return [(lab, c) for b, lab, c in self.edges if b == state]

    def successors(self) -> Dict[str, List[Tuple[Label, str]]]:
        succ: Dict[str, List[Tuple[Label, str]]] = {s: [] for s in self.states}
        for b, lab, c in self.edges:
            succ[b].append((lab, c))
        return succ

    def non_initial(self) -> Tuple[str, ...]:
        return tuple(s for s in self.states if s != self.initial)

    def inv(self, state: str) -> str:
        return self.inverse.get(state, state)

    def relabel_states(self, mapping: Mapping[str, str]) -> "Automaton":
        f = lambda s: mapping.get(s, s)
        return Automaton(
            self.m,
            tuple(f(s) for s in self.states),
            f(self.initial),
            {f(k): f(v) for k, v in self.inverse.items()},
            tuple((f(b), lab, f(c)) for b, lab, c in self.edges),
            self.weak_axiom4,
        )

    # -- acceptance -----------------------------------------------------------

    def run_words(self, u: Sequence[int], v: Sequence[int]) -> Optional[str]:
        """Final state of the run on the word pair, or None when rejected."""
        if len(u) != len(v):
            raise UsageError(f"word lengths differ: {len(u)} != {len(v)}")
        q = self.initial
        for i, j in zip(u, v):
            if not (0 <= i < self.m and 0 <= j < self.m):
                raise UsageError(f"digit outside alphabet 0..{self.m - 1}")
            q = self.step(q, (i, j))
            if q is None:
                return None
        return q

    def accepts_words(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.run_words(u, v) is not None

    def accepts(self, s: Address, t: Address) -> bool:
        """Infinite pair acceptance, decided on the (state, phase, phase) configuration space."""
        q, n = self.initial, 0
        seen = set()
        while True:
            conf = (q, s.phase(n), t.phase(n))
            if conf in seen:
                return True
            seen.add(conf)
            q = self.step(q, (s[n], t[n]))
            if q is None:
                return False
            n += 1


def accept_word_pair(a: Automaton, u: Sequence[int], v: Sequence[int]) -> Tuple[bool, Optional[str]]:
    q = a.run_words(u, v)
    return q is not None, q


def accept_address_pair(a: Automaton, s: Address, t: Address) -> bool:
    return a.accepts(s, t)


# -- validation ------------------------------------------------------------------


@dataclass
class Violation:
    axiom: str
    witness: str

    def to_dict(self):
        return {"axiom": self.axiom, "witness": self.witness}


@dataclass
class ValidationReport:
    structural: List[str] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.structural and not self.violations

    def axioms(self) -> set:
        return {v.axiom for v in self.violations}

    def to_dict(self):
        return {
            "ok": self.ok,
            "structural": self.structural,
            "violations": [v.to_dict() for v in self.violations],
        }


def validate(candidate, weak_axiom4: Optional[bool] = None) -> ValidationReport:
    """Check the four axioms plus the "no foreign edges into the initial state" rule.

    ``candidate`` may be an :class:`Automaton` or its JSON dictionary.  With
    ``weak_axiom4`` the diagonal loops at the initial state are replaced by
    the requirement that every pair (u, u) is accepted.
    """
    report = ValidationReport()
    if not isinstance(candidate, Automaton):
        try:
            candidate = Automaton.from_dict(candidate)
        except StructuralError as exc:
            report.structural.extend(exc.problems)
            return report
    a = candidate
    weak = a.weak_axiom4 if weak_axiom4 is None else weak_axiom4
    o = a.initial
    succ = a.successors()
    bad = report.violations.append

    # axiom 1
    for s in a.states:
        if not succ[s]:
            bad(Violation("axiom1", f"state {s} has no outgoing edge"))
    reach = {o}
    todo = [o]
    while todo:
        b = todo.pop()
        for _, c in succ[b]:
            if c not in reach:
                reach.add(c)
                todo.append(c)
    for s in a.states:
        if s not in reach:
            bad(Violation("axiom1", f"state {s} is unreachable from {o}"))

    # axiom 2
    seen = {}
    for b, lab, c in a.edges:
        if (b, lab) in seen and seen[(b, lab)] != c:
            bad(Violation("axiom2", f"state {b} has two outgoing edges labelled {lab}"))
        seen.setdefault((b, lab), c)

    # axiom 3
    inv = a.inverse
    for s in a.states:
        if s not in inv:
            if s == o:
                continue
            bad(Violation("axiom3", f"state {s} has no declared inverse"))
        elif inv.get(inv[s]) != s:
            bad(Violation("axiom3", f"inverse is not an involution at {s}"))
    if inv.get(o, o) != o:
        bad(Violation("axiom3", f"initial state {o} is not self-inverse"))
    edge_set = set(a.edges)
    for b, (i, j), c in a.edges:
        mirror = (inv.get(b, b), (j, i), inv.get(c, c))
        if mirror not in edge_set:
            bad(Violation("axiom3", f"edge {b}-({i},{j})->{c} lacks mirror {mirror[0]}-({j},{i})->{mirror[2]}"))

    # axiom 4
    if not weak:
        for i in a.digits:
            if a.step(o, (i, i)) != o:
                bad(Violation("axiom4", f"initial state {o} lacks loop ({i},{i})"))
        for b, lab, c in a.edges:
            if c == o and not (b == o and lab[0] == lab[1]):
                bad(Violation("initial-incoming", f"edge {b}-{lab}->{o} enters the initial state"))
    else:
        for c, i in _diagonal_gaps(a):
            bad(Violation("axiom4-weak", f"state {c} reachable by diagonal labels lacks ({i},{i})"))
    return report


def _diagonal_gaps(a: Automaton):
    reach, todo = {a.initial}, [a.initial]
    gaps = []
    while todo:
        c = todo.pop()
        for i in a.digits:
            d = a.step(c, (i, i))
            if d is None:
                gaps.append((c, i))
            elif d not in reach:
                reach.add(d)
                todo.append(d)
    return sorted(gaps)


def require_valid(a: Automaton) -> Automaton:
    rep = validate(a)
    if not rep.ok:
        msgs = rep.structural + [v.witness for v in rep.violations]
        raise ValueError("automaton is not topology-generating: " + "; ".join(msgs))
    return a


# -- graph helpers ------------------------------------------------------------------


def trim_states(nodes: Iterable, succ) -> set:
    """Greatest set of nodes each having a successor inside the set."""
    alive = set(nodes)
    preds: Dict = {n: set() for n in alive}
    count = {}
    for n in alive:
        outs = {t for t in succ(n) if t in alive}
        count[n] = len(outs)
        for t in outs:
            preds[t].add(n)
    dead = deque(n for n in alive if count[n] == 0)
    while dead:
        n = dead.popleft()
        if n not in alive:
            continue
        alive.discard(n)
        for p in preds[n]:
            if p in alive:
                count[p] -= 1
                if count[p] == 0:
                    dead.append(p)
    return alive


def strongly_connected_components(nodes: Sequence, succ) -> List[List]:
    """Tarjan's algorithm (iterative); components in reverse topological order."""
    index, low, on_stack = {}, {}, set()
    stack, comps, counter = [], [], [0]
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def isomorphism(a: Automaton, b: Automaton) -> Optional[Dict[str, str]]:
    """State bijection a -> b preserving labels and the initial state, if any.

    Determinism and reachability from the initial state force the bijection,
    so a single simultaneous walk decides it.
    """
    if a.m != b.m or len(a.states) != len(b.states) or len(a.edges) != len(b.edges):
        return None
    fwd, back = {a.initial: b.initial}, {b.initial: a.initial}
    todo = [a.initial]
    while todo:
        s = todo.pop()
        t = fwd[s]
        outs_a = dict(a.out_edges(s))
        outs_b = dict(b.out_edges(t))
        if outs_a.keys() != outs_b.keys():
            return None
        for lab, c in outs_a.items():
            d = outs_b[lab]
            if fwd.get(c, d) != d or back.get(d, c) != c:
                return None
            if c not in fwd:
                fwd[c], back[d] = d, c
                todo.append(c)
    if len(fwd) != len(a.states):
        return None
    for s, t in fwd.items():
        if fwd[a.inv(s)] != b.inv(t):
            return None
    return fwd
