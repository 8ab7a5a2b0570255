"""Exhaustive enumeration of small topology-generating automata up to symmetry.

Two automata are identified when one arises from the other by a simultaneous
renaming of digits and a renaming of states that fixes the initial state and
commutes with the inverse map.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

from .automaton import Automaton, validate
from .conditions import periodic_violations, shifted_violations

MAX_STATES = 4
MAX_DIGITS = 4


class GuardExceeded(ValueError):
    pass


def _involutions(n: int):
    def rec(rest):
        if not rest:
            yield {}
            return
        a, tail = rest[0], rest[1:]
        for sub in rec(tail):
            yield {a: a, **sub}
        for k, b in enumerate(tail):
            for sub in rec(tail[:k] + tail[k + 1:]):
                yield {a: b, b: a, **sub}

    yield from rec(list(range(1, n + 1)))


def _digit_graph_connected(m: int, o_edges) -> bool:
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in o_edges:
        parent[find(i)] = find(j)
    return len({find(d) for d in range(m)}) == 1


def canonical_key(a: Automaton) -> Tuple:
    """Lexicographically least edge encoding over the symmetry group."""
    others = list(a.non_initial())
    o = a.initial
    best = None
    for perm in itertools.permutations(range(len(others))):
        name = {o: 0}
        name.update({s: perm[k] + 1 for k, s in enumerate(others)})
        inv_code = tuple(sorted((name[s], name[a.inv(s)]) for s in others))
        for dp in itertools.permutations(range(a.m)):
            code = tuple(sorted((name[b], dp[i], dp[j], name[c]) for b, (i, j), c in a.edges))
            key = (inv_code, code)
            if best is None or key < best:
                best = key
    return best


def from_key(m: int, key) -> Automaton:
    inv_code, code = key
    n = len(inv_code)
    names = ["o"] + [f"s{k}" for k in range(1, n + 1)]
    return Automaton(
        m,
        tuple(names),
        "o",
        {names[x]: names[y] for x, y in inv_code},
        tuple((names[b], (i, j), names[c]) for b, i, j, c in code),
    )


def enumerate_automata(
    num_states: int,
    m: int,
    require_finite_class_conditions: bool = True,
    require_connected_X1: bool = True,
) -> List[Automaton]:
    """All automata with ``num_states`` states beside the initial one, up to symmetry."""
    if num_states > MAX_STATES or m > MAX_DIGITS or num_states < 0 or m < 1:
        est = (num_states + 1) ** (m * m * (num_states + 1))
        raise GuardExceeded(
            f"enumeration guard: need num_states <= {MAX_STATES} and m <= {MAX_DIGITS}; "
            f"raw search space ~{est:.3g} edge assignments"
        )
    found: Dict[Tuple, Automaton] = {}
    labels = [(i, j) for i in range(m) for j in range(m)]
    states = list(range(1, num_states + 1))
    for inv in _involutions(num_states):
        inv0 = {0: 0, **inv}
        # orbits of (state, label) slots under the mirror map
        slots, seen = [], set()
        for b in [0] + states:
            for (i, j) in labels:
                if b == 0 and i == j:
                    continue
                if (b, (i, j)) in seen:
                    continue
                mirror = (inv0[b], (j, i))
                seen.add((b, (i, j)))
                seen.add(mirror)
                slots.append(((b, (i, j)), mirror))
        base = [(0, (i, i), 0) for i in range(m)]
        _search(m, states, inv0, slots, 0, base, found, require_finite_class_conditions, require_connected_X1)
    return [found[k] for k in sorted(found)]


def _build(m, states, inv0, edges) -> Automaton:
    names = {0: "o", **{s: f"s{s}" for s in states}}
    return Automaton(
        m,
        tuple(names.values()),
        "o",
        {names[s]: names[inv0[s]] for s in states},
        tuple((names[b], lab, names[c]) for b, lab, c in edges),
    )


def _search(m, states, inv0, slots, k, edges, found, need_finite, need_connected):
    if k == len(slots):
        a = _build(m, states, inv0, edges)
        if not validate(a).ok:
            return
        if need_connected and not _digit_graph_connected(m, [l for b, l, c in edges if b == 0 and l[0] != l[1]]):
            return
        if need_finite and shifted_violations(a):
            return
        key = canonical_key(a)
        if key not in found:
            found[key] = from_key(m, key)
        return
    (b, lab), (mb, mlab) = slots[k]
    self_paired = (b, lab) == (mb, mlab)
    for c in [None] + states:
        if c is None:
            _search(m, states, inv0, slots, k + 1, edges, found, need_finite, need_connected)
            continue
        if self_paired and inv0[c] != c:
            continue
        new = [(b, lab, c)]
        if not self_paired:
            new.append((mb, mlab, inv0[c]))
        trial = edges + new
        if need_finite and periodic_violations(_build(m, states, inv0, trial)):
            continue
        _search(m, states, inv0, slots, k + 1, trial, found, need_finite, need_connected)
