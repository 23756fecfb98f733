"""Coset enumeration: known orders, audits, determinism, overflow."""

import pytest

from gig.cosets import CosetTable, EnumerationError, enumerate_cosets
from gig.graphs import (build_graph, complete_bipartite, complete_graph,
                        cycle_graph, parse_colour_spec, wheel_graph)
from gig.presentations import gamma, gamma_uncoloured, hmn, make_presentation


def order_of(p, cap=500000, strategy="hlt"):
    t = enumerate_cosets(p, max_cosets=cap, strategy=strategy)
    assert t.status == "closed", f"overflowed at {cap}"
    return t.order


def test_known_uncoloured_orders():
    assert order_of(gamma_uncoloured(complete_bipartite(3, 3))) == 16
    assert order_of(gamma_uncoloured(complete_graph(5))) == 64
    assert order_of(gamma_uncoloured(complete_bipartite(3, 4))) == 256
    assert order_of(gamma_uncoloured(complete_bipartite(2, 3))) == 4


def test_known_coloured_orders():
    k33odd = parse_colour_spec(complete_bipartite(3, 3), "odd")
    assert order_of(gamma(k33odd)) == 32
    k34odd = parse_colour_spec(complete_bipartite(3, 4), "odd")
    assert order_of(gamma(k34odd)) == 512
    k5odd = parse_colour_spec(complete_graph(5), "odd")
    assert order_of(gamma(k5odd)) == 128
    c3zero = parse_colour_spec(cycle_graph(3), "zero")
    assert order_of(gamma(c3zero)) == 4


def test_hmn_orders():
    assert order_of(hmn(1, 1)) == 1
    assert order_of(hmn(2, 2)) == 4
    assert order_of(hmn(3, 2)) == 32


def test_hlt_felsch_agree():
    for p in (gamma_uncoloured(complete_bipartite(3, 3)),
              gamma(parse_colour_spec(wheel_graph(5), "odd")),
              hmn(3, 2)):
        assert order_of(p, strategy="hlt") == order_of(p, strategy="felsch")


def test_audit_traces_all_relators():
    p = gamma(parse_colour_spec(complete_bipartite(3, 3), "odd"))
    t = enumerate_cosets(p)
    assert t.audit()
    # every defining relator acts as the identity permutation
    for rel in p.relations:
        for c in range(t.order):
            assert t.trace(rel, c) == c


def test_words_equal_and_j():
    g = parse_colour_spec(complete_bipartite(3, 3), "odd")
    p = gamma(g)
    t = enumerate_cosets(p)
    assert not t.j_is_trivial()
    assert not t.is_abelian()
    e0, e1 = 0, 1
    assert t.words_equal((e0, e1), (e1, e0)) == \
        (t.trace((e0, e1, e1, e0)) == 0)
    assert t.word_is_identity((e0, e0))
    assert not t.word_is_identity((p.j,))


def test_trivial_group():
    g = build_graph([("a", 0), ("b", 0)], [("e", "a", "b")])
    t = enumerate_cosets(gamma_uncoloured(g))
    assert t.order == 1


def test_acyclic_graph_uncoloured_order_one():
    g = build_graph(
        [("a", 0), ("b", 0), ("c", 0), ("d", 0)],
        [("e1", "a", "b"), ("e2", "b", "c"), ("e3", "b", "d")])
    assert order_of(gamma_uncoloured(g)) == 1


def test_overflow_reported_not_conflated():
    p = gamma_uncoloured(complete_bipartite(3, 6))
    t = enumerate_cosets(p, max_cosets=2000)
    assert t.status == "overflowed"
    assert t.order is None
    with pytest.raises(EnumerationError):
        t.trace((0,))


def test_free_product_negative_control():
    # two cyclic components: the uncoloured group is an infinite free
    # product, so enumeration must overflow at any cap
    g = build_graph(
        [(f"a{i}", 0) for i in range(3)] + [(f"b{i}", 0) for i in range(3)],
        [(f"ea{i}", f"a{i}", f"a{(i + 1) % 3}") for i in range(3)]
        + [(f"eb{i}", f"b{i}", f"b{(i + 1) % 3}") for i in range(3)])
    t = enumerate_cosets(gamma_uncoloured(g), max_cosets=30000)
    assert t.status == "overflowed"


def test_determinism():
    p = gamma(parse_colour_spec(wheel_graph(6), "odd"))
    t1 = enumerate_cosets(p, max_cosets=100000)
    t2 = enumerate_cosets(p, max_cosets=100000)
    assert t1.order == t2.order
    assert t1.table == t2.table
    assert t1.allocated == t2.allocated


def test_export_mult_table():
    p = gamma_uncoloured(cycle_graph(3))
    t = enumerate_cosets(p)
    exp = t.export_mult_table()
    assert exp["order"] == t.order
    assert set(exp["generators"]) == set(p.generators)
    for nm, perm in exp["generators"].items():
        assert sorted(perm) == list(range(t.order))


def test_involutivity_required():
    from gig.presentations import GroupPresentation
    bad = GroupPresentation(("x",), ((0, 0, 0),), None)
    with pytest.raises(EnumerationError):
        enumerate_cosets(bad)
