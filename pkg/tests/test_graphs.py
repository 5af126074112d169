"""Graph model, JSON interchange, bipartiteness, exact drawing geometry."""

import json
import random
from fractions import Fraction

import pytest

from matchpoly import (
    DegenerateDrawing,
    Drawing,
    Graph,
    GraphFormatError,
    OddCycle,
    Vertex,
    check_bipartite,
    circular_layout,
    detect_crossings,
    dump_graph,
    graph_from_json,
    graph_to_json,
    pendant_extension,
    validate_drawing,
)
from conftest import cycle_graph, path_graph, random_graph

F = Fraction


# -- construction and validation ------------------------------------------


def test_graph_canonicalizes_edges():
    g = Graph([Vertex("b"), Vertex("a")], [("b", "a")])
    assert g.edges == (("a", "b"),)
    assert g.adj["a"] == ("b",)
    assert g.degree("b") == 1


def test_graph_rejects_malformed_input():
    with pytest.raises(GraphFormatError):
        Graph([Vertex("a"), Vertex("a")], [])
    with pytest.raises(GraphFormatError):
        Graph([Vertex("a")], [("a", "a")])
    with pytest.raises(GraphFormatError):
        Graph([Vertex("a"), Vertex("b")], [("a", "b"), ("b", "a")])
    with pytest.raises(GraphFormatError):
        Graph([Vertex("a")], [("a", "ghost")])
    with pytest.raises(GraphFormatError):
        Graph([Vertex("a", "nonsense-tag")], [])
    with pytest.raises(GraphFormatError):
        Graph([Vertex("a", side="Q")], [])


def test_declared_sides_must_be_bichromatic():
    with pytest.raises(GraphFormatError):
        Graph([Vertex("a", side="A"), Vertex("b", side="A")], [("a", "b")])
    # enforcement only applies once every vertex declares a side
    Graph([Vertex("a", side="A"), Vertex("b")], [("a", "b")])


def test_weight_tags_accept_rationals_and_symbols():
    g = Graph(
        [Vertex("a", "3/4"), Vertex("b", "-2"), Vertex("c", "t17"), Vertex("d", "b2")],
        [],
    )
    assert set(g.weight_tags()) == {"3/4", "-2", "t17", "b2"}


# -- JSON ------------------------------------------------------------------


def test_json_round_trip_with_coordinates():
    g = Graph(
        [Vertex("u", "t1", "A"), Vertex("w", "1", "B")],
        [("u", "w")],
    )
    d = Drawing({"u": (F(0), F(1, 3)), "w": (F(-2), F(5))})
    text = dump_graph(g, d)
    g2, d2 = graph_from_json(json.loads(text))
    assert g2.ids == g.ids
    assert g2.edges == g.edges
    assert g2.vertex("u").weight == "t1"
    assert g2.vertex("u").side == "A"
    assert d2.coords == d.coords


def test_json_rejects_partial_coordinates():
    obj = {
        "vertices": [{"id": "a", "x": 0, "y": 0}, {"id": "b"}],
        "edges": [],
    }
    with pytest.raises(GraphFormatError):
        graph_from_json(obj)
    with pytest.raises(GraphFormatError):
        graph_from_json({"vertices": [{"id": "a", "x": 1}], "edges": []})
    with pytest.raises(GraphFormatError):
        graph_from_json([1, 2, 3])


# -- bipartiteness ----------------------------------------------------------


def test_bipartition_sides_are_canonical():
    g = path_graph(4)
    bip = check_bipartite(g)
    assert bip.side["p1"] == "A"  # lex-smallest vertex anchors its component
    assert bip.side["p2"] == "B"
    assert set(bip.class_a) | set(bip.class_b) == set(g.ids)
    for u, v in g.edges:
        assert bip.side[u] != bip.side[v]


def test_smaller_class_tie_break():
    g = path_graph(4)  # classes {p1, p3} and {p2, p4}, tie
    cls, members = check_bipartite(g).smaller_class()
    assert cls == "A" and list(members) == ["p1", "p3"]


def test_odd_cycle_witness_is_a_genuine_odd_closed_walk():
    rng = random.Random(31337)
    seen = 0
    for _ in range(80):
        g = random_graph(rng, n_max=9, edge_prob=0.45)
        try:
            check_bipartite(g)
        except OddCycle as exc:
            seen += 1
            cyc = exc.cycle
            assert cyc[0] == cyc[-1]
            assert len(cyc) % 2 == 0  # even node list = odd edge count
            for u, v in zip(cyc, cyc[1:]):
                assert g.has_edge(u, v)
    assert seen > 10


def test_pendant_extension_shape():
    g = cycle_graph(6)
    bip = check_bipartite(g)
    gp = pendant_extension(g, bip)
    _, members = bip.smaller_class()
    assert gp.n == g.n + len(members)
    assert gp.m == g.m + len(members)
    for u in members:
        pid = u + "_p"
        assert gp.degree(pid) == 1
        assert gp.vertex(pid).weight == "1"
        assert gp.vertex(pid).side != gp.vertex(u).side


# -- exact geometry ----------------------------------------------------------


def square_x():
    g = cycle_graph(4)
    d = Drawing({"v1": (F(0), F(0)), "v2": (F(3), F(3)), "v3": (F(3), F(0)), "v4": (F(0), F(3))})
    return g, d


def test_detect_crossings_exact_point():
    g, d = square_x()
    cs = detect_crossings(g, d)
    assert cs.k == 1
    c = cs.crossings[0]
    assert c.edge1 == ("v1", "v2") and c.edge2 == ("v3", "v4")
    assert c.point == (F(3, 2), F(3, 2))
    assert cs.on_edge(("v1", "v2"))[0][0] == F(1, 2)


def test_shared_endpoints_do_not_cross():
    g = path_graph(3)
    d = Drawing({"p1": (F(0), F(0)), "p2": (F(1), F(0)), "p3": (F(0), F(1))})
    assert detect_crossings(g, d).k == 0


def test_coincident_vertices_rejected():
    g = path_graph(2)
    d = Drawing({"p1": (F(1), F(1)), "p2": (F(1), F(1))})
    with pytest.raises(DegenerateDrawing):
        validate_drawing(g, d)


def test_vertex_on_edge_rejected():
    g = Graph([Vertex(i) for i in ("a", "b", "c")], [("a", "b")])
    d = Drawing({"a": (F(0), F(0)), "b": (F(2), F(2)), "c": (F(1), F(1))})
    with pytest.raises(DegenerateDrawing):
        validate_drawing(g, d)


def test_collinear_overlap_rejected():
    g = Graph([Vertex(i) for i in ("a", "b", "c", "d")], [("a", "b"), ("c", "d")])
    d = Drawing({"a": (F(0), F(0)), "b": (F(4), F(0)), "c": (F(1), F(0)), "d": (F(9), F(0))})
    with pytest.raises(DegenerateDrawing):
        validate_drawing(g, d)


def test_concurrent_crossings_rejected():
    ids = ["a1", "a2", "b1", "b2", "c1", "c2"]
    g = Graph([Vertex(i) for i in ids], [("a1", "a2"), ("b1", "b2"), ("c1", "c2")])
    d = Drawing(
        {
            "a1": (F(-1), F(0)), "a2": (F(1), F(0)),
            "b1": (F(0), F(-1)), "b2": (F(0), F(1)),
            "c1": (F(-1), F(-1)), "c2": (F(1), F(1)),
        }
    )
    with pytest.raises(DegenerateDrawing):
        detect_crossings(g, d)


def test_missing_coordinate_rejected():
    g = path_graph(2)
    with pytest.raises(DegenerateDrawing):
        validate_drawing(g, Drawing({"p1": (F(0), F(0))}))


def test_touching_without_transversal_is_not_a_crossing():
    # the segments share the point (1,1) but c1-c2 only touches, ending there
    g = Graph([Vertex(i) for i in ("a", "b", "c1", "c2")], [("a", "b"), ("c1", "c2")])
    d = Drawing({"a": (F(0), F(0)), "b": (F(2), F(2)), "c1": (F(0), F(2)), "c2": (F(1), F(1))})
    with pytest.raises(DegenerateDrawing):
        # endpoint of one edge lying on another edge is degenerate, not a crossing
        detect_crossings(g, d)


def test_circular_layout_validates_on_random_graphs():
    rng = random.Random(4242)
    for _ in range(25):
        g = random_graph(rng, n_max=10, edge_prob=0.4)
        d = circular_layout(g, seed=rng.randint(0, 10 ** 6))
        validate_drawing(g, d)
        detect_crossings(g, d)  # must not raise; crossings are fine
    # determinism per seed
    g = random_graph(random.Random(5), n_max=8, edge_prob=0.5)
    assert circular_layout(g, seed=11).coords == circular_layout(g, seed=11).coords
