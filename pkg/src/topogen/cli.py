"""Command-line entry point.

    topogen <cmd> [input | corpus:<name> | corpus:<name>.ifs | -] [--level n] [--bound C]
            [--format json|dot|svg] [--out path]

Exit status: 0 success, 1 domain error, 2 usage error.  Errors are also
written to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import corpus, render
from .address import Address, parse_word
from .analysis import DEFAULT_BOUND, class_of, diagonal_structure, is_pcf
from .approximation import (
    FiniteSpace,
    build_space,
    component_size_probe,
    connectedness,
    cut_point_evidence,
    point_name,
    verify_kuratowski_witness,
    word_graph,
)
from .automaton import Automaton, StructuralError, accept_word_pair, validate
from .census import enumerate_automata
from .conditions import check_finite_class_necessary_conditions
from .exact import Similitude
from .multiaddress import FinalTupleAutomaton, TupleAutomaton, compute_family
from .neighbors import IFS, neighbor_graph, verify_representation


class CliUsageError(Exception):
    pass


class DomainError(Exception):
    pass


# -- input ------------------------------------------------------------------------


def load_input(source: Optional[str]) -> dict:
    if source is None:
        raise CliUsageError("an input is required")
    if source.startswith("corpus:"):
        name = source[len("corpus:"):]
        try:
            if name.endswith(".ifs"):
                base = name[:-4]
                ifs, smap = corpus.load_ifs(base)
                d = ifs.to_dict()
                if smap is not None:
                    d["state_map"] = {s: f.to_json() for s, f in smap.items()}
                d["fixture"] = base
                return d
            d = corpus.raw(name)
        except corpus.UnknownFixture as exc:
            raise CliUsageError(str(exc.args[0])) from None
        d = dict(d)
        d["fixture"] = name
        return d
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliUsageError(f"cannot read {source}: {exc.strerror}") from None
    if not text.strip():
        raise CliUsageError("input is empty")
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliUsageError(f"input is not JSON: {exc}") from None
    if not isinstance(d, dict):
        raise CliUsageError("input must be a JSON object")
    return d


def _automaton(d: dict, weak: bool = False) -> Automaton:
    if "maps" in d and "states" not in d:
        raise CliUsageError("expected an automaton, got an IFS")
    try:
        a = Automaton.from_dict(d)
    except StructuralError as exc:
        raise DomainError("malformed automaton: " + "; ".join(exc.problems)) from None
    rep = validate(a, weak_axiom4=weak or a.weak_axiom4)
    if not rep.ok:
        raise DomainError("automaton is not topology-generating: " + "; ".join(v.witness for v in rep.violations))
    return a


def _ifs(d: dict):
    if "maps" not in d:
        raise CliUsageError("expected an IFS description with 'field_N' and 'maps'")
    ifs = IFS.from_dict(d)
    smap = None
    if "state_map" in d:
        smap = {s: Similitude.from_json(v, ifs.N) for s, v in d["state_map"].items()}
    return ifs, smap


# -- output -----------------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


def emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _graph_doc(g: render.Graph, fmt: str) -> str:
    if fmt == "svg":
        return render.to_svg(g)
    if fmt == "json":
        return _dump({"name": g.name, "directed": g.directed, "nodes": sorted(g.nodes),
                      "edges": [list(e) for e in g.merged()]})
    return render.to_dot(g)


# -- commands ---------------------------------------------------------------------


def cmd_validate(args) -> int:
    d = load_input(args.input)
    rep = validate(d, weak_axiom4=True if args.weak else None)
    emit(_dump(rep.to_dict()), args.out)
    return 0 if rep.ok else 1


def _pair(text: str):
    if "(" in text:
        return Address.parse(text)
    return parse_word(text)


def cmd_accept(args) -> int:
    a = _automaton(load_input(args.input))
    u, v = _pair(args.u), _pair(args.v)
    if isinstance(u, Address) != isinstance(v, Address):
        raise CliUsageError("give two finite words or two addresses, not one of each")
    if isinstance(u, Address):
        out = {"accepted": a.accepts(u, v)}
    else:
        ok, q = accept_word_pair(a, u, v)
        out = {"accepted": ok, "state": q}
    emit(_dump(out), args.out)
    return 0


def cmd_class(args) -> int:
    a = _automaton(load_input(args.input))
    cls = class_of(a, Address.parse(args.address), args.bound)
    emit(_dump(cls.to_dict()), args.out)
    return 0


def cmd_enumerate(args) -> int:
    found = enumerate_automata(args.states, args.digits, not args.no_finite_class, not args.no_connected)
    emit(_dump({"count": len(found), "automata": [a.to_dict() for a in found]}), args.out)
    return 0


def cmd_pcf(args) -> int:
    a = _automaton(load_input(args.input))
    emit(_dump(is_pcf(a).to_dict()), args.out)
    return 0


def cmd_diagonal(args) -> int:
    a = _automaton(load_input(args.input), weak=True)
    emit(_dump(diagonal_structure(a).to_dict()), args.out)
    return 0


def cmd_props(args) -> int:
    a = _automaton(load_input(args.input))
    rep = check_finite_class_necessary_conditions(a)
    out = rep.to_dict()
    out["pcf"] = is_pcf(a).pcf
    emit(_dump(out), args.out)
    return 0


def _family(args, a: Automaton):
    return compute_family(a, args.bound)


def cmd_multi(args) -> int:
    if args.format != "json":
        raise CliUsageError("multi writes JSON only")
    d = load_input(args.input)
    fam = _family(args, _automaton(d))
    print("K = {" + ",".join(str(k) for k in fam.K) + "}")
    outdir = Path(args.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    stem = d.get("fixture", "")
    prefix = f"{stem}." if stem else ""
    for k in fam.K:
        path = outdir / f"{prefix}G{k}.json"
        path.write_text(_dump(fam.automata[k].to_dict()), encoding="utf-8")
        print(f"wrote {path}")
    return 0


def cmd_approx(args) -> int:
    if args.level is None:
        raise CliUsageError("approx needs --level")
    fam = _family(args, _automaton(load_input(args.input)))
    if args.probe:
        emit(_dump(component_size_probe(fam, args.level)), args.out)
        return 0
    space = build_space(fam, args.level)
    if args.cut_point:
        p = space.point(args.cut_point)
        emit(_dump({"point": point_name(p), "cut_point": cut_point_evidence(space, p)}), args.out)
        return 0
    if args.witness:
        w = json.loads(Path(args.witness).read_text(encoding="utf-8"))
        verts = [space.point(t) for t in w["vertices"]]
        arcs = [[space.point(t) for t in arc] for arc in w["arcs"]]
        rep = verify_kuratowski_witness(space, verts, arcs)
        emit(_dump(rep.to_dict()), args.out)
        return 0 if rep.ok else 1
    if args.format != "json":
        emit(_graph_doc(render.space_graph(space), args.format), args.out)
        return 0
    out = space.to_dict()
    comps = connectedness(space)
    out["connected"] = len(comps) == 1
    out["components"] = len(comps)
    emit(_dump(out), args.out)
    return 0


def cmd_neighbors(args) -> int:
    ifs, _ = _ifs(load_input(args.input))
    kw = {} if args.prune_bound is None else {"prune_bound": args.prune_bound}
    ng = neighbor_graph(ifs, **kw)
    a = ng.automaton
    n_states = len(a.non_initial())
    n_edges = sum(1 for b, _, _ in a.edges if b != a.initial)
    if args.format == "json":
        doc = ng.to_dict()
        doc["counts"] = {"states": n_states, "edges": n_edges}
        text = _dump(doc)
    else:
        text = _graph_doc(render.automaton_graph(a), args.format)
    emit(text, args.out)
    if args.out:
        print(f"{n_states} states, {n_edges} edges")
    return 0


def cmd_verify_rep(args) -> int:
    d = load_input(args.input)
    a = _automaton(d)
    if args.ifs:
        ifs, smap = _ifs(load_input(args.ifs))
    elif "fixture" in d:
        try:
            ifs, smap = corpus.load_ifs(d["fixture"])
        except corpus.UnknownFixture as exc:
            raise CliUsageError(str(exc.args[0])) from None
    else:
        raise CliUsageError("verify-rep needs --ifs for a file input")
    if smap is None:
        raise CliUsageError("the IFS description has no state_map")
    rep = verify_representation(a, ifs, smap)
    emit(_dump(rep.to_dict()), args.out)
    return 0 if rep.ok else 1


def cmd_render(args) -> int:
    d = load_input(args.input)
    fmt = args.format
    if "neighborhoods" in d:
        g = render.space_graph(FiniteSpace.from_dict(d))
    elif "arity" in d:
        final = any("S" in s for s in d.get("states", [])) or not d.get("states")
        cls = FinalTupleAutomaton if final else TupleAutomaton
        g = render.tuple_graph(cls.from_dict(d)) if d.get("states") else render.Graph(f"G{d['arity']}", [], [])
    else:
        a = _automaton(d)
        if args.word_graph:
            if args.level is None:
                raise CliUsageError("--word-graph needs --level")
            verts, edges = word_graph(a, args.level)
            g = render.word_graph_graph(verts, edges, args.level)
        elif args.space:
            if args.level is None:
                raise CliUsageError("--space needs --level")
            g = render.space_graph(build_space(_family(args, a), args.level))
        else:
            g = render.automaton_graph(a)
    emit(_graph_doc(g, fmt), args.out)
    return 0


def cmd_corpus(args) -> int:
    if args.input:
        name = args.input[len("corpus:"):] if args.input.startswith("corpus:") else args.input
        emit(_dump(load_input(f"corpus:{name}")), args.out)
        return 0
    idx = corpus.index()
    width = max(len(n) for n in idx)
    lines = [f"{n:<{width}}  {'[ifs] ' if idx[n]['ifs'] else '      '}{idx[n]['description']}" for n in sorted(idx)]
    emit("\n".join(lines) + "\n", args.out)
    return 0


# -- parser -----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliUsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="topogen", description="Topology-generating automata toolkit.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def add(name, func, help, input=True):
        sp = sub.add_parser(name, help=help)
        if input:
            sp.add_argument("input", nargs="?" if input == "optional" else None,
                            help="JSON file, corpus:<name>, corpus:<name>.ifs or -")
        sp.add_argument("--level", type=int)
        sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
        sp.add_argument("--format", choices=["json", "dot", "svg"], default=None)
        sp.add_argument("--out")
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", cmd_validate, "check the automaton axioms")
    sp.add_argument("--weak", action="store_true", help="weak diagonal axiom")
    sp = add("accept", cmd_accept, "accept a pair of words or addresses such as 0(1) 1(0)")
    sp.add_argument("u")
    sp.add_argument("v")
    sp = add("class", cmd_class, "equivalence class of an address")
    sp.add_argument("address")
    sp = add("enumerate", cmd_enumerate, "census of small automata", input=False)
    sp.add_argument("--states", type=int, required=True, help="states besides the initial one")
    sp.add_argument("--digits", type=int, required=True)
    sp.add_argument("--no-finite-class", action="store_true")
    sp.add_argument("--no-connected", action="store_true")
    add("pcf", cmd_pcf, "post-critically finite test")
    add("diagonal", cmd_diagonal, "graph-directed structure from diagonal labels")
    add("multi", cmd_multi, "multiple-address family G_k")
    sp = add("approx", cmd_approx, "finite approximation space X^n")
    sp.add_argument("--cut-point")
    sp.add_argument("--witness", help="JSON file with vertices and arcs")
    sp.add_argument("--probe", action="store_true", help="component sizes for levels 1..n")
    add("props", cmd_props, "necessary conditions for finite classes")
    sp = add("neighbors", cmd_neighbors, "neighbor graph of an IFS")
    sp.add_argument("--prune-bound", type=float)
    sp = add("verify-rep", cmd_verify_rep, "check an automaton against an IFS and state map")
    sp.add_argument("--ifs")
    sp = add("render", cmd_render, "DOT or SVG drawing")
    sp.add_argument("--word-graph", action="store_true")
    sp.add_argument("--space", action="store_true")
    add("corpus", cmd_corpus, "list or print bundled fixtures", input="optional")
    return p


def _diag(kind: str, exc: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "type": type(exc).__name__, "message": str(exc), "exit": code}) + "\n")
    return code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.format is None:
            args.format = "dot" if args.cmd == "render" else "json"
        return args.func(args)
    except CliUsageError as exc:
        return _diag("usage", exc, 2)
    except (DomainError, ValueError, RuntimeError, KeyError) as exc:
        return _diag("domain", exc, 1)


if __name__ == "__main__":
    sys.exit(main())
