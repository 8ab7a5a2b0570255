"""Automata for complete k-tuples of equivalent addresses.

A k-tuple of addresses is read synchronously.  After a common prefix the
coordinates fall into blocks of equal words; between two blocks we keep the
state of the pair in G2, or DEAD once the pair has been rejected.  Runs that
stay connected (the graph of live pairs is connected) and eventually separate
all coordinates describe k pairwise distinct, equivalent addresses.

States are stored up to permutation of blocks.  The tuple automaton of arity
k+1 is grown with a pruning rule: every state on a useful run has a
coordinate whose removal gives a useful state of arity k (remove a leaf of a
spanning tree of the live-pair graph).

Completeness of a run (no further address is equivalent to the tuple) is
decided with a breakpoint construction on the set of partially read
candidate addresses t that have left every block.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .address import Address
from .analysis import DEFAULT_BOUND, ClassBoundExceeded
from .automaton import Automaton, strongly_connected_components, trim_states

DEAD = -1


class G2Table:
    """Index-based transition table of a pair automaton; state 0 is the initial state."""

    def __init__(self, a: Automaton):
        self.automaton = a
        self.names = list(a.states)
        idx = {s: k for k, s in enumerate(self.names)}
        self.m = a.m
        self.trans = [[DEAD] * (a.m * a.m) for _ in self.names]
        for b, (i, j), c in a.edges:
            self.trans[idx[b]][i * a.m + j] = idx[c]
        self.inv = [idx[a.inv(s)] for s in self.names]

    def step(self, q: int, i: int, j: int) -> int:
        return DEAD if q == DEAD else self.trans[q][i * self.m + j]

    def name(self, q: int) -> str:
        return "-" if q == DEAD else self.names[q]

    def __eq__(self, other):
        return isinstance(other, G2Table) and self.automaton == other.automaton


@dataclass(frozen=True)
class TupleState:
    mults: Tuple[int, ...]
    mat: Tuple[int, ...]

    @property
    def blocks(self) -> int:
        return len(self.mults)

    @property
    def arity(self) -> int:
        return sum(self.mults)

    @property
    def discrete(self) -> bool:
        return all(r == 1 for r in self.mults)

    def entry(self, a: int, b: int) -> int:
        return self.mat[a * len(self.mults) + b]

    def describe(self, g2: G2Table) -> str:
        B = self.blocks
        parts = []
        for a in range(B):
            row = "".join(
                "=" if a == b else ("." if self.entry(a, b) == DEAD else g2.name(self.entry(a, b)))
                for b in range(B)
            )
            parts.append(f"{self.mults[a]}:{row}")
        return "|".join(parts)


# -- canonical labelling ----------------------------------------------------------


def _refine(colors: List[int], mat: Sequence[int], B: int) -> List[int]:
    ncls = len(set(colors))
    while True:
        sig = [
            (colors[b], tuple(sorted((mat[b * B + c], colors[c]) for c in range(B) if c != b)))
            for b in range(B)
        ]
        rank = {s: k for k, s in enumerate(sorted(set(sig)))}
        colors = [rank[s] for s in sig]
        if len(rank) == ncls:
            return colors
        ncls = len(rank)


def canonical_perms(mults: Sequence[int], mat: Sequence[int]) -> Tuple[TupleState, List[Tuple[int, ...]]]:
    """Canonical form and every permutation reaching it.

    A permutation p lists raw block indices in canonical order.  Colour
    refinement with individualisation; leaves are compared by their full
    encoding, so the result does not depend on the input order.
    """
    B = len(mults)
    best = None
    perms: List[Tuple[int, ...]] = []

    def encode(p):
        return (tuple(mults[i] for i in p), tuple(mat[p[a] * B + p[b]] for a in range(B) for b in range(B)))

    def search(colors):
        nonlocal best, perms
        colors = _refine(colors, mat, B)
        cells: Dict[int, List[int]] = {}
        for b, c in enumerate(colors):
            cells.setdefault(c, []).append(b)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            p = tuple(sorted(range(B), key=lambda b: colors[b]))
            code = encode(p)
            if best is None or code < best:
                best, perms = code, [p]
            elif code == best:
                perms.append(p)
            return
        for v in cells[target]:
            search([2 * c + (1 if c == target and b != v else 0) for b, c in enumerate(colors)])

    search(list(mults))
    return TupleState(best[0], best[1]), perms


def _connected(B: int, mat: Sequence[int]) -> bool:
    if B <= 1:
        return True
    seen, todo = {0}, [0]
    while todo:
        a = todo.pop()
        for b in range(B):
            if b not in seen and mat[a * B + b] != DEAD:
                seen.add(b)
                todo.append(b)
    return len(seen) == B


def _remove_one(state: TupleState, b: int) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    mults = list(state.mults)
    B = len(mults)
    if mults[b] > 1:
        mults[b] -= 1
        return tuple(mults), state.mat
    keep = [a for a in range(B) if a != b]
    mat = tuple(state.mat[x * B + y] for x in keep for y in keep)
    if not _connected(len(keep), mat):
        return None
    return tuple(mults[a] for a in keep), mat


# -- tuple automata ---------------------------------------------------------------


@dataclass
class TupleEdge:
    """Transition of a tuple automaton.

    ``parents[j]`` = (source block, digit) for raw target block j; ``perms``
    are the permutations putting raw target blocks into canonical order.
    """

    parents: Tuple[Tuple[int, int], ...]
    target: TupleState
    perms: Tuple[Tuple[int, ...], ...]

    def canonical_parents(self, p: Optional[Tuple[int, ...]] = None) -> Tuple[Tuple[int, int], ...]:
        p = self.perms[0] if p is None else p
        return tuple(self.parents[j] for j in p)

    def label(self, source: TupleState) -> Tuple[int, ...]:
        """Digits in the coordinate order of the source state."""
        out = []
        for b, r in enumerate(source.mults):
            ds = sorted(d for (pb, d), mult in zip(self.parents, self._child_mults()) if pb == b for _ in range(mult))
            out.extend(ds)
        return tuple(out)

    def _child_mults(self):
        # target multiplicities in raw order
        inv = {j: i for i, j in enumerate(self.perms[0])}
        return [self.target.mults[inv[j]] for j in range(len(self.parents))]


@dataclass
class TupleAutomaton:
    k: int
    g2: G2Table
    initial: TupleState
    states: List[TupleState]
    edges: Dict[TupleState, List[TupleEdge]]

    def __len__(self):
        return len(self.states)

    @property
    def empty(self) -> bool:
        return not self.states

    def edge_count(self) -> int:
        return sum(len(v) for v in self.edges.values())

    def to_dict(self) -> dict:
        names = {s: f"q{n}" for n, s in enumerate(self.states)}
        out_edges = []
        for s in self.states:
            for e in self.edges.get(s, []):
                if e.target in names:
                    out_edges.append({"from": names[s], "to": names[e.target], "labels": [list(e.label(s))],
                                      "coords": _coord_map(s, e), "parents": [list(x) for x in e.parents],
                                      "perms": [list(x) for x in e.perms]})
        return {
            "arity": self.k,
            "initial": names.get(self.initial),
            "states": [{"name": names[s], "blocks": list(s.mults), "pairs": s.describe(self.g2), "mat": list(s.mat)}
                       for s in self.states],
            "edges": out_edges,
            "g2": self.g2.automaton.to_dict(),
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "TupleAutomaton":
        g2 = G2Table(Automaton.from_dict(raw["g2"]))
        by_name = {d["name"]: TupleState(tuple(d["blocks"]), tuple(d["mat"])) for d in raw["states"]}
        states = [by_name[d["name"]] for d in raw["states"]]
        edges: Dict[TupleState, List[TupleEdge]] = {s: [] for s in states}
        for e in raw["edges"]:
            edges[by_name[e["from"]]].append(TupleEdge(_pairs(e["parents"]), by_name[e["to"]], _pairs(e["perms"])))
        init = by_name.get(raw["initial"]) if raw.get("initial") is not None else None
        return cls(int(raw["arity"]), g2, init, states, edges)


def _pairs(rows) -> tuple:
    return tuple(tuple(r) for r in rows)


def _coord_map(source: TupleState, e: TupleEdge) -> List[int]:
    """For each target coordinate, the source coordinate it continues."""
    start = list(itertools.accumulate((0,) + source.mults))
    used = {b: 0 for b in range(source.blocks)}
    order = []
    # source coordinates of block b are taken in digit order, matching label()
    children = sorted(range(len(e.parents)), key=lambda j: (e.parents[j][0], e.parents[j][1]))
    raw_first = {}
    mults = e._child_mults()
    for j in children:
        b = e.parents[j][0]
        raw_first[j] = start[b] + used[b]
        used[b] += mults[j]
    for j in e.perms[0]:
        order.extend(range(raw_first[j], raw_first[j] + mults[j]))
    return order


def _digit_splits(r: int, m: int):
    """All ways to give r equal coordinates digits, as (digit, count) lists."""
    for counts in itertools.product(range(r + 1), repeat=m):
        if sum(counts) == r:
            yield [(d, c) for d, c in enumerate(counts) if c]


def _expand(g2: G2Table, s: TupleState, choice):
    """The successor for one digit multiset per block, or None if it disconnects."""
    parents, mults = [], []
    for b, parts in enumerate(choice):
        for d, c in parts:
            parents.append((b, d))
            mults.append(c)
    n = len(parents)
    mat = [0] * (n * n)
    for x in range(n):
        bx, dx = parents[x]
        for y in range(x + 1, n):
            by, dy = parents[y]
            q = g2.step(0 if bx == by else s.entry(bx, by), dx, dy)
            mat[x * n + y] = q
            mat[y * n + x] = DEAD if q == DEAD else g2.inv[q]
    if not _connected(n, mat):
        return None
    return tuple(parents), tuple(mults), tuple(mat)


def _successors(g2: G2Table, s: TupleState):
    options = [list(_digit_splits(r, g2.m)) for r in s.mults]
    for choice in itertools.product(*options):
        out = _expand(g2, s, choice)
        if out is not None:
            yield out


def _lifted_choices(g2: G2Table, s: TupleState, previous: "TupleAutomaton"):
    """Digit choices for s obtained from edges of s minus one coordinate.

    On a useful run some coordinate is a leaf of the limit spanning tree;
    without it the run is a useful run of arity k, so the step is an edge
    of the previous automaton plus a digit for the removed coordinate.
    """
    allowed = previous.edges
    choices = set()
    for b in range(s.blocks):
        red = _remove_one(s, b)
        if red is None:
            continue
        rmults, rmat = red
        canon, perms = canonical_perms(rmults, rmat)
        if canon not in allowed:
            continue
        p0 = perms[0]
        # raw reduced block index -> block of s
        raw_to_s = list(range(s.blocks)) if s.mults[b] > 1 else [a for a in range(s.blocks) if a != b]
        for e in allowed[canon]:
            target_mults = e._child_mults()
            counts: Dict[Tuple[int, int], int] = {}
            for (pb, d), c in zip(e.parents, target_mults):
                sb = raw_to_s[p0[pb]]
                counts[(sb, d)] = counts.get((sb, d), 0) + c
            for digit in range(g2.m):
                full = dict(counts)
                full[(b, digit)] = full.get((b, digit), 0) + 1
                choice = tuple(tuple(sorted((d, c) for (sb, d), c in full.items() if sb == a)) for a in range(s.blocks))
                choices.add(choice)
    for choice in sorted(choices):
        out = _expand(g2, s, choice)
        if out is not None:
            yield out


def build_tuple_automaton(g2: Automaton, k: int, previous: Optional[TupleAutomaton] = None,
                          max_states: int = 200_000) -> TupleAutomaton:
    """Candidate tuple automaton of arity k, trimmed to useful states."""
    table = previous.g2 if previous is not None else G2Table(g2)
    allowed = set(previous.states) if previous is not None else None
    init = TupleState((k,), (0,))
    keep_cache: Dict[TupleState, bool] = {}

    def keep(s: TupleState) -> bool:
        if allowed is None:
            return True
        if s not in keep_cache:
            # a spanning tree has at least two leaves, counted with multiplicity
            leaves = 0
            for b in range(s.blocks):
                red = _remove_one(s, b)
                if red is not None and canonical_perms(*red)[0] in allowed:
                    leaves += s.mults[b]
                    if leaves >= 2:
                        break
            keep_cache[s] = leaves >= 2
        return keep_cache[s]

    edges: Dict[TupleState, List[TupleEdge]] = {}
    seen = {init}
    todo = deque([init])
    while todo:
        s = todo.popleft()
        out = []
        gen = _successors(table, s) if previous is None else _lifted_choices(table, s, previous)
        for parents, mults, mat in gen:
            t, perms = canonical_perms(mults, mat)
            if not keep(t):
                continue
            out.append(TupleEdge(parents, t, tuple(perms)))
            if t not in seen:
                seen.add(t)
                if len(seen) > max_states:
                    raise ClassBoundExceeded(f"tuple automaton of arity {k} exceeds {max_states} states")
                todo.append(t)
        edges[s] = out
    return duplicate_collapse(TupleAutomaton(k, table, init, sorted(seen, key=_state_order), edges))


def _state_order(s: TupleState):
    return (len(s.mults), s.mults, s.mat)


def duplicate_collapse(t: TupleAutomaton) -> TupleAutomaton:
    """Keep only states with a run that separates all coordinates forever.

    Runs on which two coordinates agree forever describe fewer than k
    addresses; they are removed here rather than merged.
    """
    succ = lambda s: [e.target for e in t.edges.get(s, []) if e.target in t.edges]
    disc = [s for s in t.states if s.discrete and s in t.edges]
    core = trim_states(disc, lambda s: [x for x in succ(s) if x.discrete])
    pred: Dict[TupleState, List[TupleState]] = {}
    for s in t.states:
        for x in succ(s):
            pred.setdefault(x, []).append(s)
    alive, todo = set(core), list(core)
    while todo:
        x = todo.pop()
        for p in pred.get(x, []):
            if p not in alive:
                alive.add(p)
                todo.append(p)
    states = [s for s in t.states if s in alive]
    edges = {s: [e for e in t.edges[s] if e.target in alive] for s in states}
    init = t.initial if t.initial in alive else None
    if init is None:
        return TupleAutomaton(t.k, t.g2, t.initial, [], {})
    return TupleAutomaton(t.k, t.g2, init, states, edges)


def build_G3(g2: Automaton) -> TupleAutomaton:
    return extend(build_tuple_automaton(g2, 2), g2)


def extend(gk: TupleAutomaton, g2: Automaton) -> TupleAutomaton:
    if gk.empty:
        return TupleAutomaton(gk.k + 1, gk.g2, TupleState((gk.k + 1,), (0,)), [], {})
    return build_tuple_automaton(g2, gk.k + 1, gk)


# -- completeness -----------------------------------------------------------------

Lift = Tuple[int, ...]


@dataclass(frozen=True)
class SplitNode:
    sigma: TupleState
    S: Tuple[Lift, ...]
    O: Tuple[Lift, ...]

    @property
    def breakpoint(self) -> bool:
        return not self.O


@dataclass
class SplitEdge:
    edge: TupleEdge
    perm: Tuple[int, ...]
    target: SplitNode


@dataclass
class FinalTupleAutomaton:
    """Runs of a tuple automaton that visit accepting nodes infinitely often.

    Accepting nodes have separated coordinates and an empty set of pending
    lifts, i.e. every candidate further address has died since the last
    breakpoint.
    """

    k: int
    g2: G2Table
    initial: Optional[SplitNode]
    nodes: List[SplitNode]
    edges: Dict[SplitNode, List[SplitEdge]]

    @property
    def empty(self) -> bool:
        return not self.nodes

    def accepting(self, n: SplitNode) -> bool:
        return n.breakpoint and n.sigma.discrete

    def edge_count(self) -> int:
        return sum(len(v) for v in self.edges.values())

    def to_dict(self) -> dict:
        names = {n: f"q{i}" for i, n in enumerate(self.nodes)}
        out_edges = []
        for n in self.nodes:
            for se in self.edges.get(n, []):
                out_edges.append({"from": names[n], "to": names[se.target],
                                  "labels": [list(se.edge.label(n.sigma))],
                                  "coords": _coord_map(n.sigma, _with_perm(se.edge, se.perm)),
                                  "parents": [list(x) for x in se.edge.parents],
                                  "perms": [list(x) for x in se.edge.perms], "perm": list(se.perm)})
        return {
            "arity": self.k,
            "initial": names.get(self.initial),
            "states": [{"name": names[n], "blocks": list(n.sigma.mults), "pairs": n.sigma.describe(self.g2),
                        "complete": self.accepting(n), "pending": len(n.S), "mat": list(n.sigma.mat),
                        "S": [list(x) for x in n.S], "O": [list(x) for x in n.O]} for n in self.nodes],
            "edges": out_edges,
            "g2": self.g2.automaton.to_dict(),
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "FinalTupleAutomaton":
        g2 = G2Table(Automaton.from_dict(raw["g2"]))
        by_name = {
            d["name"]: SplitNode(TupleState(tuple(d["blocks"]), tuple(d["mat"])), _pairs(d["S"]), _pairs(d["O"]))
            for d in raw["states"]
        }
        nodes = [by_name[d["name"]] for d in raw["states"]]
        edges: Dict[SplitNode, List[SplitEdge]] = {n: [] for n in nodes}
        for e in raw["edges"]:
            tgt = by_name[e["to"]]
            te = TupleEdge(_pairs(e["parents"]), tgt.sigma, _pairs(e["perms"]))
            edges[by_name[e["from"]]].append(SplitEdge(te, tuple(e["perm"]), tgt))
        init = by_name.get(raw["initial"]) if raw.get("initial") is not None else None
        return cls(int(raw["arity"]), g2, init, nodes, edges)

    def block_paths(self, n: int):
        """Distinct (node, block words) pairs reached by paths of length n."""
        layer = {(self.initial, ((),))} if self.initial is not None else set()
        for _ in range(n):
            nxt = set()
            for node, words in layer:
                for se in self.edges.get(node, []):
                    new = tuple(words[b] + (d,) for b, d in se.edge.canonical_parents(se.perm))
                    nxt.add((se.target, new))
            layer = nxt
        return layer

    def word_sets(self, n: int) -> set:
        return {frozenset(words) for _, words in self.block_paths(n)}

    def accepts(self, addresses: Sequence[Address]) -> bool:
        """Does some coordinate order of the lasso tuple have an accepting run?"""
        if len(addresses) != self.k or self.initial is None:
            return False
        # coordinates are tracked through blocks: cur maps canonical block -> coordinates
        node = self.initial
        groups: Tuple[Tuple[int, ...], ...] = (tuple(range(self.k)),)
        pos = 0
        seen = {}
        trail = []
        while True:
            conf = (node, groups, tuple(a.phase(pos) for a in addresses))
            if conf in seen:
                return any(self.accepting(x) for x in trail[seen[conf]:])
            seen[conf] = len(trail)
            trail.append(node)
            step = None
            for se in self.edges.get(node, []):
                parents = se.edge.canonical_parents(se.perm)
                new_groups = []
                ok = True
                for b, d in parents:
                    members = tuple(c for c in groups[b] if addresses[c][pos] == d)
                    if not members:
                        ok = False
                        break
                    new_groups.append(members)
                if ok and sum(len(g) for g in new_groups) == self.k and \
                        all(len(g) == r for g, r in zip(new_groups, se.target.sigma.mults)):
                    step = (se.target, tuple(new_groups))
                    break
            if step is None:
                return False
            node, groups = step
            pos += 1


def _with_perm(e: TupleEdge, p) -> TupleEdge:
    return TupleEdge(e.parents, e.target, (p,) + tuple(x for x in e.perms if x != p))


def _lift_step(g2: G2Table, lift: Lift, parents, m: int) -> List[Lift]:
    out = []
    for e in range(m):
        new = tuple(g2.step(lift[b], d, e) for b, d in parents)
        if any(q != DEAD for q in new):
            out.append(new)
    return out


def _spawns(g2: G2Table, sigma: TupleState, parents) -> List[Lift]:
    out = []
    used: Dict[int, set] = {}
    for b, d in parents:
        used.setdefault(b, set()).add(d)
    for src in range(sigma.blocks):
        for e in range(g2.m):
            if e in used.get(src, ()):
                continue
            new = tuple(g2.step(0 if b == src else sigma.entry(b, src), d, e) for b, d in parents)
            if any(q != DEAD for q in new):
                out.append(new)
    return out


def completeness_split(gk: TupleAutomaton, max_nodes: int = 500_000) -> Tuple[FinalTupleAutomaton, List[TupleState]]:
    """Final automaton of complete k-tuples, and the tuple states used only by extendable runs."""
    g2 = gk.g2
    if gk.empty:
        return FinalTupleAutomaton(gk.k, g2, None, [], {}), []
    init = SplitNode(gk.initial, (), ())
    edges: Dict[SplitNode, List[SplitEdge]] = {}
    seen = {init}
    todo = deque([init])
    while todo:
        node = todo.popleft()
        out = []
        for e in gk.edges.get(node.sigma, []):
            S_raw = set()
            for lift in node.S:
                S_raw.update(_lift_step(g2, lift, e.parents, g2.m))
            spawned = _spawns(g2, node.sigma, e.parents)
            if node.O:
                O_raw = set()
                for lift in node.O:
                    O_raw.update(_lift_step(g2, lift, e.parents, g2.m))
            else:
                O_raw = None
            S_raw.update(spawned)
            if O_raw is None:
                O_raw = S_raw
            best = None
            for p in e.perms:
                S_c = tuple(sorted(tuple(l[j] for j in p) for l in S_raw))
                O_c = tuple(sorted(tuple(l[j] for j in p) for l in O_raw))
                if best is None or (S_c, O_c) < best[0]:
                    best = ((S_c, O_c), p)
            (S_c, O_c), p = best
            tgt = SplitNode(e.target, S_c, O_c)
            out.append(SplitEdge(e, p, tgt))
            if tgt not in seen:
                seen.add(tgt)
                if len(seen) > max_nodes:
                    raise ClassBoundExceeded(f"completeness analysis of arity {gk.k} exceeds {max_nodes} nodes")
                todo.append(tgt)
        edges[node] = out
    nodes = sorted(seen, key=lambda n: (_state_order(n.sigma), n.S, n.O))
    succ = lambda n: [se.target for se in edges.get(n, [])]
    good = set()
    for comp in strongly_connected_components(nodes, succ):
        cs = set(comp)
        cyclic = len(comp) > 1 or any(t in cs for t in succ(comp[0]))
        if cyclic and any(n.breakpoint and n.sigma.discrete for n in comp):
            good |= cs
    pred: Dict[SplitNode, List[SplitNode]] = {}
    for n in nodes:
        for t in succ(n):
            pred.setdefault(t, []).append(n)
    alive, stack = set(good), list(good)
    while stack:
        x = stack.pop()
        for p in pred.get(x, []):
            if p not in alive:
                alive.add(p)
                stack.append(p)
    final_nodes = [n for n in nodes if n in alive]
    final_edges = {n: [se for se in edges[n] if se.target in alive] for n in final_nodes}
    final = FinalTupleAutomaton(gk.k, g2, init if init in alive else None, final_nodes, final_edges)
    used = {n.sigma for n in final_nodes}
    remainder = [s for s in gk.states if s not in used]
    return final, remainder


# -- family -------------------------------------------------------------------------


@dataclass
class Family:
    g2: Automaton
    K: List[int]
    automata: Dict[int, FinalTupleAutomaton]
    candidates: Dict[int, TupleAutomaton]
    partial: bool = False

    def summary(self) -> dict:
        return {
            "K": self.K,
            "arities": {
                str(k): {"candidate_states": len(self.candidates[k]), "candidate_edges": self.candidates[k].edge_count(),
                         "final_states": len(self.automata[k].nodes), "final_edges": self.automata[k].edge_count()}
                for k in sorted(self.candidates)
            },
        }


def compute_family(g2: Automaton, bound: int = DEFAULT_BOUND) -> Family:
    cand = build_tuple_automaton(g2, 2)
    candidates: Dict[int, TupleAutomaton] = {}
    automata: Dict[int, FinalTupleAutomaton] = {}
    K: List[int] = []
    k = 2
    while not cand.empty:
        if k > bound:
            fam = Family(g2, K, automata, candidates, partial=True)
            err = ClassBoundExceeded(f"class bound exceeded: tuples of arity {k} > {bound}")
            err.family = fam
            raise err
        candidates[k] = cand
        final, _ = completeness_split(cand)
        automata[k] = final
        if not final.empty:
            K.append(k)
        cand = extend(cand, g2)
        k += 1
    return Family(g2, K, automata, candidates)
