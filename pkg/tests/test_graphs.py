"""Graph core: construction, parsing, serialization, components, colour."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from gig.gf2 import incidence_matrix
from gig.graphs import (GraphFormatError, build_graph, builtin_graph,
                        c2c2_graph, complete_bipartite, complete_graph,
                        component_ids, connected_components, cycle_graph,
                        graph_from_json, graph_to_json, graph_to_text,
                        parse_colour_spec, parse_graph, petersen_graph,
                        subgraph, wheel_graph)


def test_build_and_ids():
    g = build_graph([("a", 0), ("b", 1)], [("e", "a", "b"), ("f", "a", "b")])
    assert g.n == 2 and g.m == 2
    assert g.vertex_id("b") == 1 and g.edge_id("f") == 1
    assert g.colour == (0, 1)
    assert g.edges == ((0, 1), (0, 1))
    assert g.degree(0) == 2
    assert g.other_end(0, 0) == 1


def test_build_rejects_loops_and_duplicates():
    with pytest.raises(GraphFormatError):
        build_graph([("a", 0)], [("e", "a", "a")])
    with pytest.raises(GraphFormatError):
        build_graph([("a", 0), ("a", 1)], [])
    with pytest.raises(GraphFormatError):
        build_graph([("a", 0), ("b", 0)],
                    [("e", "a", "b"), ("e", "a", "b")])
    with pytest.raises(GraphFormatError):
        build_graph([("a", 2)], [])


def test_builtin_sizes():
    assert (complete_graph(5).n, complete_graph(5).m) == (5, 10)
    assert (complete_bipartite(3, 6).n, complete_bipartite(3, 6).m) == (9, 18)
    assert (wheel_graph(5).n, wheel_graph(5).m) == (6, 10)
    assert (cycle_graph(4).n, cycle_graph(4).m) == (4, 4)
    assert (c2c2_graph().n, c2c2_graph().m) == (4, 4)
    assert (petersen_graph().n, petersen_graph().m) == (10, 15)
    assert builtin_graph("k(3,3)").m == 9
    assert builtin_graph("wheel(6)").n == 7
    with pytest.raises(GraphFormatError):
        builtin_graph("whatsit(3)")


def test_wheel_structure():
    g = wheel_graph(4)
    hub = g.vertex_id("h")
    assert g.degree(hub) == 4
    rim = [v for v in range(g.n) if v != hub]
    assert all(g.degree(v) == 3 for v in rim)


def test_parity_and_components():
    g = build_graph(
        [("a", 1), ("b", 0), ("c", 1), ("d", 1)],
        [("e1", "a", "b"), ("e2", "c", "d")])
    comps = component_ids(g)
    assert len(comps) == 2
    assert g.parity() == 1
    # parity is the XOR of component parities
    x = 0
    for cv, _ in comps:
        x ^= g.parity(cv)
    assert g.parity() == x
    subs = connected_components(g)
    assert [s.vertex_names for s in subs] == [("a", "b"), ("c", "d")]
    assert subs[1].colour == (1, 1)


def test_subgraph_keeps_names():
    g = complete_bipartite(2, 2)
    s = subgraph(g, (0, 2), [e for e, (u, v) in enumerate(g.edges)
                             if u == 0 and v == 2])
    assert s.n == 2 and s.m == 1
    assert s.vertex_names == (g.vertex_names[0], g.vertex_names[2])


def test_colour_specs():
    g = complete_bipartite(3, 3)
    assert parse_colour_spec(g, "zero").colour == (0,) * 6
    assert parse_colour_spec(g, "odd").colour == (0,) * 5 + (1,)
    assert parse_colour_spec(g, "even").colour == (1,) * 6
    g5 = complete_graph(5)
    ev = parse_colour_spec(g5, "even")
    assert sum(ev.colour) % 2 == 0
    nm = g.vertex_names[2]
    c = parse_colour_spec(g, f"{nm}=1")
    assert c.colour[2] == 1 and sum(c.colour) == 1
    with pytest.raises(GraphFormatError):
        parse_colour_spec(g, "nope=1")
    with pytest.raises(GraphFormatError):
        parse_colour_spec(g, f"{nm}=2")


def test_parse_text_format():
    text = """
    # comment
    vertex a 0
    vertex b 1
    edge e a b   # trailing comment
    """
    g = parse_graph(text)
    assert g.n == 2 and g.m == 1 and g.colour == (0, 1)
    with pytest.raises(GraphFormatError):
        parse_graph("vertex a 0\nedge e a zz\n")
    with pytest.raises(GraphFormatError):
        parse_graph("edge e a b\n")


def test_serialize_round_trips():
    for g in (complete_bipartite(3, 3), wheel_graph(5), c2c2_graph(),
              parse_colour_spec(petersen_graph(), "odd")):
        assert parse_graph(graph_to_text(g)) == g
        assert graph_from_json(graph_to_json(g)) == g


def test_json_deterministic():
    g = parse_colour_spec(complete_graph(4), "even")
    assert graph_to_json(g) == graph_to_json(g)
    obj = json.loads(graph_to_json(g))
    assert set(obj) >= {"vertices", "edges"}


def test_incidence_columns_have_two_ones():
    for g in (complete_graph(5), wheel_graph(6), c2c2_graph()):
        mat = incidence_matrix(g)
        for e in range(g.m):
            col = sum((mat.rows[v] >> e) & 1 for v in range(g.n))
            assert col == 2


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    m = draw(st.integers(min_value=0, max_value=8)) if n > 1 else 0
    colour = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    edges = []
    for i in range(m):
        u = draw(st.integers(0, n - 2))
        v = draw(st.integers(u + 1, n - 1))
        edges.append((f"e{i}", f"v{u}", f"v{v}"))
    return build_graph([(f"v{i}", colour[i]) for i in range(n)], edges)


@given(graphs())
@settings(max_examples=120, deadline=None)
def test_round_trip_property(g):
    assert parse_graph(graph_to_text(g)) == g
    assert graph_from_json(graph_to_json(g)) == g


@given(graphs())
@settings(max_examples=120, deadline=None)
def test_component_partition_property(g):
    comps = component_ids(g)
    vs = sorted(v for cv, _ in comps for v in cv)
    es = sorted(e for _, ce in comps for e in ce)
    assert vs == list(range(g.n))
    assert es == list(range(g.m))
    x = 0
    for cv, _ in comps:
        x ^= g.parity(cv)
    assert x == g.parity()
