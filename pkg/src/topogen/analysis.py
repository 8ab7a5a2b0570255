"""Equivalence classes, the p.c.f. test and diagonal (graph-directed) structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .address import Address
from .automaton import Automaton, strongly_connected_components, trim_states

DEFAULT_BOUND = 16


class ClassBoundExceeded(RuntimeError):
    def __init__(self, message: str, partial: Optional[List[Address]] = None):
        super().__init__(message)
        self.partial = partial or []


class DiagonalGap(ValueError):
    def __init__(self, state: str, digit: int):
        super().__init__(f"state {state} is reachable by diagonal labels but has no ({digit},{digit}) edge")
        self.state = state
        self.digit = digit


@dataclass
class EquivalenceClass:
    input: Address
    members: Tuple[Address, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, t: Address) -> bool:
        return t in self.members

    def to_dict(self):
        return {"input": str(self.input), "members": [str(t) for t in self.members], "size": self.size}


def _next_pos(s: Address, pos: int) -> int:
    # positions 0..lasso_size-1; the period wraps back to len(preperiod)
    n = pos + 1
    return n if n < s.lasso_size else len(s.preperiod)


def partners(a: Automaton, s: Address) -> List[Address]:
    """All t with (s, t) accepted, assuming there are finitely many.

    Works on the product of the automaton with the lasso of s.  Each
    accepted t is the output of exactly one infinite path; finitely many
    paths means every reachable recurrent component is a bare cycle
    without live exits.
    """
    start = (a.initial, 0)
    succ: Dict[Tuple[str, int], List[Tuple[int, Tuple[str, int]]]] = {}
    todo, seen = [start], {start}
    while todo:
        node = todo.pop()
        q, pos = node
        d = s[pos]
        outs = []
        for (i, j), c in a.out_edges(q):
            if i == d:
                nxt = (c, _next_pos(s, pos))
                outs.append((j, nxt))
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        succ[node] = outs
    alive = trim_states(seen, lambda v: [w for _, w in succ[v]])
    live = {v: [(j, w) for j, w in succ[v] if w in alive] for v in alive}
    if start not in alive:
        return []
    comp_of = {}
    for comp in strongly_connected_components(sorted(alive, key=repr), lambda v: [w for _, w in live[v]]):
        for v in comp:
            comp_of[v] = tuple(sorted(comp, key=repr))
    out: List[Address] = []
    # walk transient parts; stop at the first node of a recurrent component
    stack = [(start, ())]
    while stack:
        v, pre = stack.pop()
        comp = comp_of[v]
        recurrent = len(comp) > 1 or any(w == v for _, w in live[v])
        if recurrent:
            cyc, node = [], v
            for _ in range(len(comp)):
                if len(live[node]) != 1:
                    raise ClassBoundExceeded(f"address {s} has infinitely many partners")
                j, node = live[node][0]
                cyc.append(j)
            if node != v:
                raise ClassBoundExceeded(f"address {s} has infinitely many partners")
            out.append(Address(pre, tuple(cyc)))
            continue
        for j, w in live[v]:
            stack.append((w, pre + (j,)))
    return sorted(set(out))


def class_of(a: Automaton, s: Address, bound: int = DEFAULT_BOUND) -> EquivalenceClass:
    if bound < 2:
        raise ValueError("class bound must be at least 2")
    members = {s}
    todo = [s]
    while todo:
        t = todo.pop()
        for u in partners(a, t):
            if u not in members:
                members.add(u)
                if len(members) > bound:
                    raise ClassBoundExceeded(f"class bound exceeded: more than {bound} members", sorted(members))
                todo.append(u)
    return EquivalenceClass(s, tuple(sorted(members)))


# -- post-critically finite -------------------------------------------------------


@dataclass
class PcfReport:
    pcf: bool
    witness: List[str] = field(default_factory=list)
    reason: str = ""

    def __bool__(self):
        return self.pcf

    def to_dict(self):
        return {"pcf": self.pcf, "witness": self.witness, "reason": self.reason}


def is_pcf(a: Automaton) -> PcfReport:
    """No directed path between two distinct directed cycles.

    The diagonal loops at the initial state are left out: they only encode a
    common prefix.  Parallel labels count as separate edges, so a state with
    two loop labels carries two cycles.
    """
    o = a.initial
    edges = [(b, lab, c) for b, lab, c in a.edges if not (b == o and c == o and lab[0] == lab[1])]
    succ: Dict[str, List[str]] = {s: [] for s in a.states}
    for b, _, c in edges:
        succ[b].append(c)
    comps = strongly_connected_components(list(a.states), lambda v: succ[v])
    comp_id = {v: k for k, comp in enumerate(comps) for v in comp}
    cyclic = []
    for k, comp in enumerate(comps):
        inner = [e for e in edges if comp_id[e[0]] == k and comp_id[e[2]] == k]
        if not inner:
            continue
        if len(inner) != len(comp):
            lab = [f"{b}-{l}->{c}" for b, l, c in inner]
            return PcfReport(False, sorted(lab), f"component {sorted(comp)} contains more than one cycle")
        cyclic.append(k)
    # reachability between cyclic components
    for k in cyclic:
        src = comps[k][0]
        parent = {src: None}
        todo = [src]
        while todo:
            v = todo.pop()
            for w in succ[v]:
                if w not in parent:
                    parent[w] = v
                    todo.append(w)
        for w in parent:
            if comp_id[w] != k and comp_id[w] in cyclic:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return PcfReport(False, list(reversed(path)), "a path joins two cycles")
    return PcfReport(True)


# -- diagonal structure ---------------------------------------------------------


@dataclass
class DiagonalStructure:
    V0: Tuple[str, ...]
    d: Dict[Tuple[str, int], str]
    m: int

    def equations(self) -> List[str]:
        lines = []
        for c in self.V0:
            terms = " ∪ ".join(f"h_{i}^{c}(X^{self.d[(c, i)]})" for i in range(self.m))
            lines.append(f"X^{c} = {terms}")
        return lines

    def to_dict(self):
        return {
            "V0": list(self.V0),
            "d": {f"{c},{i}": t for (c, i), t in sorted(self.d.items())},
            "equations": self.equations(),
        }


def diagonal_structure(a: Automaton) -> DiagonalStructure:
    o = a.initial
    order = [o]
    seen = {o}
    d: Dict[Tuple[str, int], str] = {}
    k = 0
    while k < len(order):
        c = order[k]
        k += 1
        for i in a.digits:
            t = a.step(c, (i, i))
            if t is None:
                raise DiagonalGap(c, i)
            d[(c, i)] = t
            if t not in seen:
                seen.add(t)
                order.append(t)
    return DiagonalStructure(tuple(order), d, a.m)
