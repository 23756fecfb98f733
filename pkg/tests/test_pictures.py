"""Planar pictures: certified relations checked against coset enumeration."""

import pytest

from gig.cosets import enumerate_cosets
from gig.graphs import (build_graph, c2c2_graph, complete_bipartite,
                        complete_graph, cycle_graph, magic_pentagram_graph,
                        magic_square_graph, parse_colour_spec, wheel_graph)
from gig.pictures import (CROSSING_PAIRS, Picture, crossing_picture,
                          from_embedding, picture_from_json, picture_to_json)
from gig.presentations import gamma


def _k33_odd():
    return parse_colour_spec(magic_square_graph(), "odd")


def _k5_odd():
    return parse_colour_spec(magic_pentagram_graph(), "odd")


# ---------------------------------------------------------------------------
# crossing pictures

def test_crossing_picture_k33():
    g = _k33_odd()
    e, f = CROSSING_PAIRS["k33"]
    pic = crossing_picture(g, e, f)
    rep = pic.validate()
    assert rep.ok, rep.errors
    assert not pic.is_closed()
    assert pic.boundary_word() == ("1", "5", "1", "5")
    assert pic.character() == (1,) * 6
    word, a = pic.vankampen_relation()
    assert word == ("1", "5", "1", "5") and a == 1


def test_crossing_picture_k5():
    g = _k5_odd()
    e, f = CROSSING_PAIRS["k5"]
    pic = crossing_picture(g, e, f)
    assert pic.validate().ok
    assert pic.boundary_word() == ("1", "4", "1", "4")
    assert pic.character() == (1,) * 5
    assert pic.vankampen_relation() == (("1", "4", "1", "4"), 1)


@pytest.mark.parametrize("game,graph_fn", [
    ("k33", _k33_odd), ("k5", _k5_odd)])
def test_crossing_relation_holds_in_group(game, graph_fn):
    # the certified relation e f e f = J is replayed in the actual group
    g = graph_fn()
    pic = crossing_picture(g, *CROSSING_PAIRS[game])
    word, a = pic.vankampen_relation()
    assert a == 1
    p = gamma(g)
    t = enumerate_cosets(p, max_cosets=10_000)
    assert t.status == "closed"
    assert t.words_equal(p.word_from_names(word), (p.j,))
    assert not t.j_is_trivial()  # the relation is not vacuous here


def test_crossing_picture_rejects_adjacent_pair():
    with pytest.raises(ValueError, match="share a vertex"):
        crossing_picture(_k33_odd(), "1", "2")


def test_crossing_picture_rejects_uncrossable_pair():
    # edges in different components can never alternate around the boundary
    g = parse_colour_spec(c2c2_graph(), "zero")
    with pytest.raises(ValueError, match="alternate"):
        crossing_picture(g, "1", "3")


def test_crossing_picture_rejects_nonplanar_remainder():
    # removing a disjoint pair from K_{3,6} leaves a K_{3,4} subgraph
    g = parse_colour_spec(complete_bipartite(3, 6), "zero")
    e = g.edge_names[0]
    u, v = g.edges[0]
    f = next(g.edge_names[i] for i, (a, b) in enumerate(g.edges)
             if not ({a, b} & {u, v}))
    with pytest.raises(ValueError, match="does not embed"):
        crossing_picture(g, e, f)


def test_crossing_picture_boundary_name_collision():
    g = _k33_odd()
    with pytest.raises(ValueError, match="collides"):
        crossing_picture(g, "1", "5", boundary_name="x")


# ---------------------------------------------------------------------------
# closed pictures from embeddings

def test_closed_picture_certifies_j_trivial():
    # planar and odd: the closed picture forces J = 1, and enumeration of
    # the group confirms it
    for make in (lambda: wheel_graph(4), lambda: complete_graph(4),
                 lambda: cycle_graph(5)):
        g = parse_colour_spec(make(), "odd")
        pic = from_embedding(g)
        assert pic.validate().ok
        assert pic.is_closed()
        assert pic.character() == (1,) * g.n
        word, a = pic.vankampen_relation()
        assert word == () and a == 1
        p = gamma(g)
        t = enumerate_cosets(p, max_cosets=100_000)
        assert t.status == "closed" and t.j_is_trivial()


def test_closed_picture_even_colouring_is_vacuous():
    # all-even colouring: the same picture certifies J^0 = 1, and J
    # really is nontrivial in the group
    g = parse_colour_spec(wheel_graph(4), "zero")
    pic = from_embedding(g)
    assert pic.validate().ok and pic.is_closed()
    word, a = pic.vankampen_relation()
    assert word == () and a == 0
    t = enumerate_cosets(gamma(g), max_cosets=100_000)
    assert t.status == "closed" and not t.j_is_trivial()


def test_from_embedding_rejects_nonplanar():
    with pytest.raises(ValueError, match="not planar"):
        from_embedding(_k33_odd())


def test_from_embedding_component_restriction():
    # K33 plus a separate triangle; only the triangle is pictured
    k = complete_bipartite(3, 3)
    verts = [(v, 0) for v in k.vertex_names] + [("t1", 1), ("t2", 0),
                                                ("t3", 0)]
    edges = [(k.edge_names[i], k.vertex_names[u], k.vertex_names[v])
             for i, (u, v) in enumerate(k.edges)]
    edges += [("s1", "t1", "t2"), ("s2", "t2", "t3"), ("s3", "t3", "t1")]
    g = build_graph(verts, edges)
    pic = from_embedding(g, vertices=("t1", "t2", "t3"))
    assert pic.validate().ok and pic.is_closed()
    chi = pic.character()
    assert sum(chi) == 3
    assert [g.vertex_names[i] for i, c in enumerate(chi) if c] == \
        ["t1", "t2", "t3"]
    word, a = pic.vankampen_relation()
    assert word == () and a == 1  # t1 carries the only odd colour


def test_from_embedding_partial_component_fails_validation():
    g = parse_colour_spec(cycle_graph(3), "zero")
    pic = from_embedding(g, vertices=("v1",))
    rep = pic.validate()
    assert not rep.ok
    assert any("biject" in e for e in rep.errors)


# ---------------------------------------------------------------------------
# canonical boundary, tampering, serialization

def test_canonical_boundary_word_least_rotation():
    g = _k33_odd()
    pic = crossing_picture(g, "1", "5")
    # rotate the ring at the boundary vertex: same embedding, shifted word
    ring = pic.rotation[pic.boundary]
    rot = dict(pic.rotation)
    rot[pic.boundary] = ring[1:] + ring[:1]
    shifted = Picture(pic.graph, pic.vertices, pic.boundary, pic.edges,
                      rot, pic.h_v, pic.h_e)
    assert shifted.validate().ok
    assert shifted.boundary_word() == ("5", "1", "5", "1")
    assert shifted.canonical_boundary_word() == ("1", "5", "1", "5")
    assert shifted.canonical_boundary_word() == \
        min(shifted.boundary_word()[i:] + shifted.boundary_word()[:i]
            for i in range(4))


def test_tampered_vertex_label_rejected():
    pic = crossing_picture(_k33_odd(), "1", "5")
    h_v = dict(pic.h_v)
    h_v["x"] = "y"  # two picture vertices now claim the same graph vertex
    bad = Picture(pic.graph, pic.vertices, pic.boundary, pic.edges,
                  pic.rotation, h_v, pic.h_e)
    rep = bad.validate()
    assert not rep.ok and any("biject" in e for e in rep.errors)


def test_tampered_edge_label_rejected():
    pic = from_embedding(parse_colour_spec(cycle_graph(4), "odd"))
    h_e = dict(pic.h_e)
    names = sorted(h_e)
    h_e[names[0]], h_e[names[1]] = h_e[names[1]], h_e[names[0]]
    bad = Picture(pic.graph, pic.vertices, pic.boundary, pic.edges,
                  pic.rotation, pic.h_v, h_e)
    assert not bad.validate().ok


def test_tampered_rotation_rejected():
    # swapping two entries in one rotation breaks the embedding check
    pic = from_embedding(parse_colour_spec(wheel_graph(4), "odd"))
    rot = {v: list(r) for v, r in pic.rotation.items()}
    hub = "h"
    r = rot[hub]
    assert len(r) >= 3
    r[0], r[1] = r[1], r[0]
    rot = {v: tuple(r) for v, r in rot.items()}
    bad = Picture(pic.graph, pic.vertices, pic.boundary, pic.edges,
                  rot, pic.h_v, pic.h_e)
    rep = bad.validate()
    # the altered rotation either stops being planar or changes faces;
    # for the wheel hub it must fail
    assert not rep.ok


def test_picture_json_round_trip():
    for pic in (crossing_picture(_k33_odd(), "1", "5"),
                from_embedding(parse_colour_spec(wheel_graph(5), "odd"))):
        text = picture_to_json(pic)
        back = picture_from_json(text)
        assert back.validate().ok
        assert back.boundary_word() == pic.boundary_word()
        assert back.character() == pic.character()
        assert back.vankampen_relation() == pic.vankampen_relation()
        assert picture_to_json(back) == text  # byte-stable


def test_boundary_missing_raises():
    with pytest.raises(ValueError, match="boundary"):
        Picture(_k33_odd(), ("x",), "b", (), {"x": ()}, {}, {})
