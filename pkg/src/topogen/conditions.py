"""Necessary conditions for finite equivalence classes.

An accepted pair (s, t) with s != t where s is periodic, or where s = u t,
forces an infinite class.  Both situations are searched on finite products
of the automaton.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .address import Address, format_word
from .automaton import Automaton, trim_states


class SearchLimitExceeded(RuntimeError):
    pass


@dataclass
class FiniteClassReport:
    periodic: List[Address] = field(default_factory=list)
    shifted: List[Tuple[str, str]] = field(default_factory=list)
    initial_return: List[str] = field(default_factory=list)
    shift_bound: int = 0

    @property
    def clean(self) -> bool:
        return not (self.periodic or self.shifted or self.initial_return)

    def to_dict(self):
        return {
            "clean": self.clean,
            "periodic": [str(a) for a in self.periodic],
            "shifted": [{"u": u, "t": t} for u, t in self.shifted],
            "initial_return": self.initial_return,
            "shift_bound": self.shift_bound,
        }


def _index(a: Automaton):
    idx = {s: k for k, s in enumerate(a.states)}
    return idx, len(a.states)


def _relation(a: Automaton, idx, n, d):
    rows = [0] * n
    for b, (i, _), c in a.edges:
        if i == d:
            rows[idx[b]] |= 1 << idx[c]
    return tuple(rows)


def _compose(r, s):
    out = []
    for row in r:
        acc, k = 0, 0
        while row:
            if row & 1:
                acc |= s[k]
            row >>= 1
            k += 1
        out.append(acc)
    return tuple(out)


def _escapes(rel, n) -> bool:
    """Is there an infinite rel-path from state 0 that visits some other state?"""
    succ = lambda q: [k for k in range(n) if rel[q] >> k & 1]
    alive = trim_states(range(n), succ)
    seen, todo = set(), [k for k in succ(0)]
    while todo:
        q = todo.pop()
        if q in seen:
            continue
        seen.add(q)
        if q != 0 and q in alive:
            return True
        todo.extend(succ(q))
    return False


def periodic_violations(a: Automaton, limit: int = 200_000, first_only: bool = True) -> List[Address]:
    """Periodic s with an accepted partner t != s, searched over the monoid of s-relations.

    Since the initial state only has its diagonal loops as incoming edges, a
    run that leaves it never comes back; so ``w^inf`` has a partner iff some
    power-iterated relation path escapes the initial state.
    """
    idx, n = _index(a)
    gens = {d: _relation(a, idx, n, d) for d in a.digits}
    found: List[Address] = []
    seen = {}
    frontier = [((d,), gens[d]) for d in a.digits]
    while frontier:
        nxt = []
        for w, rel in frontier:
            if rel in seen:
                continue
            seen[rel] = w
            if len(seen) > limit:
                raise SearchLimitExceeded(f"relation monoid exceeds {limit} elements")
            if _escapes(rel, n):
                found.append(Address((), w))
                if first_only:
                    return found
            for d in a.digits:
                nxt.append((w + (d,), _compose(rel, gens[d])))
        frontier = nxt
    return found


def shifted_violations(a: Automaton, max_shift: int = 3) -> List[Tuple[str, str]]:
    """Accepted pairs (u t, t), u nonempty of length <= max_shift, with u t != t."""
    out = []
    o = a.initial
    for L in range(1, max_shift + 1):
        start = (o, ())
        succ_cache = {}

        def succ(node):
            if node in succ_cache:
                return succ_cache[node]
            q, buf = node
            res = []
            for b, (i, j), c in a.edges:
                if b != q:
                    continue
                if len(buf) < L:
                    res.append(((c, buf + (j,)), (i, j)))
                elif buf[0] == i:
                    res.append(((c, buf[1:] + (j,)), (i, j)))
            succ_cache[node] = res
            return res

        nodes, todo, parent = {start}, [start], {start: None}
        while todo:
            v = todo.pop()
            for w, lab in succ(v):
                if w not in nodes:
                    nodes.add(w)
                    parent[w] = (v, lab)
                    todo.append(w)
        alive = trim_states(nodes, lambda v: [w for w, _ in succ(v)])
        hit = sorted((v for v in alive if v[0] != o), key=repr)
        if hit:
            v = hit[0]
            labs = []
            while parent[v] is not None:
                v, lab = parent[v]
                labs.append(lab)
            labs.reverse()
            out.append((format_word([l[0] for l in labs[:L]]), format_word([l[1] for l in labs])))
            return out
    return out


def check_finite_class_necessary_conditions(a: Automaton, max_shift: int = 3) -> FiniteClassReport:
    rep = FiniteClassReport(shift_bound=max_shift)
    o = a.initial
    for b, lab, c in a.edges:
        if c == o and not (b == o and lab[0] == lab[1]):
            rep.initial_return.append(f"{b}-{lab}->{o}")
    rep.periodic = periodic_violations(a)
    if not rep.periodic:
        rep.shifted = shifted_violations(a, max_shift)
    return rep
