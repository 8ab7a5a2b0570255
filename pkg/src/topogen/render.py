"""DOT and SVG output for automata, tuple automata, finite spaces and word graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from html import escape
from typing import Dict, List, Optional, Sequence, Tuple

from .address import format_word
from .automaton import Automaton

SVG_GUARD = 400


class RenderGuardExceeded(ValueError):
    pass


@dataclass
class Graph:
    name: str
    nodes: List[str]
    edges: List[Tuple[str, str, str]]
    directed: bool = True
    initial: Optional[str] = None

    def merged(self) -> List[Tuple[str, str, str]]:
        """One edge per node pair, labels comma-joined in sorted order."""
        groups: Dict[Tuple[str, str], List[str]] = {}
        for a, b, lab in self.edges:
            groups.setdefault((a, b), []).append(lab)
        return [(a, b, ",".join(sorted(set(l for l in labs if l)))) for (a, b), labs in sorted(groups.items())]


def _lab(pair: Sequence[int]) -> str:
    return "(" + ",".join(str(d) for d in pair) + ")"


def automaton_graph(a: Automaton) -> Graph:
    return Graph("automaton", list(a.states), [(b, c, _lab(l)) for b, l, c in a.edges], True, a.initial)


def tuple_graph(t) -> Graph:
    d = t.to_dict()
    nodes = [s["name"] for s in d["states"]]
    edges = [(e["from"], e["to"], ",".join(_lab(l) for l in e["labels"])) for e in d["edges"]]
    return Graph(f"G{d['arity']}", nodes, edges, True, d.get("initial"))


def space_graph(space) -> Graph:
    from .approximation import point_name

    nodes = [point_name(p) for p in space.points]
    edges = []
    for y in space.points:
        for x in space.nbhd[y]:
            if x != y:
                edges.append((point_name(x), point_name(y), ""))
    return Graph(f"X{space.level}", nodes, edges, True)


def word_graph_graph(verts, edges, level: int) -> Graph:
    return Graph(f"words{level}", [format_word(v) for v in verts],
                 [(format_word(u), format_word(v), "") for u, v in edges], False)


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph) -> str:
    kind, arrow = ("digraph", "->") if g.directed else ("graph", "--")
    lines = [f"{kind} {_q(g.name)} {{"]
    for n in sorted(g.nodes):
        attrs = ' [shape=doublecircle]' if n == g.initial else ""
        lines.append(f"  {_q(n)}{attrs};")
    for a, b, lab in g.merged():
        attr = f" [label={_q(lab)}]" if lab else ""
        lines.append(f"  {_q(a)} {arrow} {_q(b)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _layers(g: Graph) -> List[List[str]]:
    succ: Dict[str, List[str]] = {n: [] for n in g.nodes}
    for a, b, _ in g.edges:
        succ[a].append(b)
        if not g.directed:
            succ[b].append(a)
    depth: Dict[str, int] = {}
    roots = ([g.initial] if g.initial in succ else []) + sorted(g.nodes)
    for r in roots:
        if r in depth:
            continue
        base = max(depth.values(), default=-1) + 1 if depth else 0
        depth[r] = base
        todo = deque([r])
        while todo:
            x = todo.popleft()
            for y in sorted(succ[x]):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    todo.append(y)
    layers: Dict[int, List[str]] = {}
    for n, d in depth.items():
        layers.setdefault(d, []).append(n)
    return [sorted(layers[d]) for d in sorted(layers)]


def to_svg(g: Graph, guard: int = SVG_GUARD) -> str:
    if len(g.nodes) > guard:
        raise RenderGuardExceeded(f"{len(g.nodes)} nodes exceed the SVG guard of {guard}; use --format dot")
    dx, dy, r = 140, 90, 22
    pos: Dict[str, Tuple[int, int]] = {}
    layers = _layers(g)
    width = max((len(l) for l in layers), default=1)
    for i, layer in enumerate(layers):
        off = (width - len(layer)) * dx // 2
        for j, n in enumerate(layer):
            pos[n] = (60 + off + j * dx, 50 + i * dy)
    W = 120 + max(width - 1, 0) * dx
    H = 100 + max(len(layers) - 1, 0) * dy
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="monospace" font-size="11">']
    if g.directed:
        out.append('<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto">'
                   '<path d="M0,0 L10,5 L0,10 z"/></marker></defs>')
    marker = ' marker-end="url(#arrow)"' if g.directed else ""
    for a, b, lab in g.merged():
        (x1, y1), (x2, y2) = pos[a], pos[b]
        if a == b:
            out.append(f'<circle cx="{x1}" cy="{y1 - r - 10}" r="10" fill="none" stroke="black"/>')
            tx, ty = x1, y1 - r - 24
        else:
            vx, vy = x2 - x1, y2 - y1
            d = max((vx * vx + vy * vy) ** 0.5, 1e-9)
            sx, sy = x1 + vx * r / d, y1 + vy * r / d
            ex, ey = x2 - vx * r / d, y2 - vy * r / d
            out.append(f'<line x1="{sx:.1f}" y1="{sy:.1f}" x2="{ex:.1f}" y2="{ey:.1f}" stroke="black"{marker}/>')
            tx, ty = (sx + ex) / 2, (sy + ey) / 2 - 3
        if lab:
            out.append(f'<text x="{tx:.1f}" y="{ty:.1f}" text-anchor="middle">{escape(lab)}</text>')
    for n in sorted(g.nodes):
        x, y = pos[n]
        width_attr = ' stroke-width="2.5"' if n == g.initial else ""
        out.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="white" stroke="black"{width_attr}/>')
        out.append(f'<text x="{x}" y="{y + 4}" text-anchor="middle">{escape(n)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
