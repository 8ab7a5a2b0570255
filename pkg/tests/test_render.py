import pytest

from topogen import corpus, render
from topogen.approximation import word_graph

from conftest import family, space


def test_binary_dot():
    dot = render.to_dot(render.automaton_graph(corpus.load("binary")))
    assert dot.startswith('digraph "automaton" {')
    assert dot.count(";") == 3 + 5
    assert '"o" -> "o" [label="(0,0),(1,1)"];' in dot
    assert '"o" -> "right" [label="(0,1)"];' in dot
    assert '"o" -> "left" [label="(1,0)"];' in dot
    assert '"right" -> "right" [label="(1,0)"];' in dot


@pytest.mark.parametrize("name", corpus.names())
def test_dot_is_deterministic(name):
    a = corpus.load(name)
    b = a.relabel_states({})
    assert render.to_dot(render.automaton_graph(a)) == render.to_dot(render.automaton_graph(b))
    assert render.to_svg(render.automaton_graph(a)) == render.to_svg(render.automaton_graph(b))


def test_svg_well_formed():
    import xml.etree.ElementTree as ET

    svg = render.to_svg(render.automaton_graph(corpus.load("triangle")))
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert len([e for e in root.iter() if e.tag.endswith("circle") and e.get("r") == "22"]) == 4


def test_exotic_word_graph():
    verts, edges = word_graph(corpus.load("exotic"), 3)
    g = render.word_graph_graph(verts, edges, 3)
    assert len(g.nodes) == 27 and not g.directed
    dot = render.to_dot(g)
    assert dot.startswith('graph "words3"') and " -- " in dot


def test_space_and_tuple_graphs():
    g = render.space_graph(space("square_incomplete", 1))
    assert len(g.nodes) == 9
    assert ('0', '{0,1,2,3}', '') in g.edges
    t = render.tuple_graph(family("triangle").automata[6])
    assert t.name == "G6" and t.initial == "q0"


def test_empty_tuple_automaton():
    empty = family("binary").candidates[2].__class__(3, family("binary").candidates[2].g2, None, [], {})
    g = render.tuple_graph(empty)
    assert g.nodes == [] and render.to_dot(g) == 'digraph "G3" {\n}\n'


def test_svg_guard():
    g = render.Graph("big", [str(i) for i in range(10)], [])
    with pytest.raises(render.RenderGuardExceeded, match="dot"):
        render.to_svg(g, guard=5)
