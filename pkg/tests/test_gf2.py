"""GF(2) solvability and abelianization against brute-force oracles."""

import itertools
import random

import pytest

from gig.cosets import enumerate_cosets
from gig.gf2 import (Gf2Matrix, Unsolvable, abelianization_exponent,
                     abelianization_order, classical_solvable,
                     incidence_matrix, solve_and_enumerate)
from gig.graphs import (build_graph, complete_bipartite, complete_graph,
                        component_ids, cycle_graph, parse_colour_spec,
                        wheel_graph)
from gig.presentations import gamma_uncoloured, make_presentation

from conftest import random_colouring, random_multigraph


def brute_force_solutions(g):
    sols = []
    for bits in itertools.product((0, 1), repeat=g.m):
        if all(sum(bits[e] for e in g.incident[v]) % 2 == g.colour[v]
               for v in range(g.n)):
            sols.append(dict(enumerate(bits)))
    return sols


def test_rank_small():
    mat = Gf2Matrix.from_bits([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert mat.rank() == 2


def test_solvable_iff_component_parity_even_brute_force():
    rng = random.Random(7)
    for _ in range(60):
        g = random_colouring(rng, random_multigraph(rng, max_vertices=5,
                                                    max_edges=6))
        brute = brute_force_solutions(g)
        assert classical_solvable(g) == bool(brute)
        comp_even = all(g.parity(cv) == 0 for cv, _ in component_ids(g))
        assert classical_solvable(g) == comp_even
        if brute:
            sols = solve_and_enumerate(g)
            got = sorted(tuple(sorted(s.items())) for s in sols.assignments)
            want = sorted(tuple(sorted(s.items())) for s in brute)
            assert got == want
            assert sols.count == len(brute)
        else:
            with pytest.raises(Unsolvable):
                solve_and_enumerate(g)


def test_solution_count_formula():
    rng = random.Random(11)
    for _ in range(40):
        g = random_multigraph(rng, max_vertices=6, max_edges=9)
        g = g.with_colour((0,) * g.n)
        sols = solve_and_enumerate(g, cap=1)
        rank = incidence_matrix(g).rank()
        assert sols.count == 2 ** (g.m - rank)


def test_enumeration_cap_truncates():
    g = build_graph([(f"v{i}", 0) for i in range(2)],
                    [(f"e{i}", "v0", "v1") for i in range(6)])
    sols = solve_and_enumerate(g, cap=8)
    assert sols.truncated and len(sols.assignments) == 8
    assert sols.count == 2 ** 5


def test_gray_code_order():
    g = build_graph([("a", 0), ("b", 0)],
                    [("e0", "a", "b"), ("e1", "a", "b"), ("e2", "a", "b")])
    sols = solve_and_enumerate(g)
    assert not sols.truncated
    for s1, s2 in zip(sols.assignments, sols.assignments[1:]):
        diff = sum(s1[e] != s2[e] for e in s1)
        assert diff in (1, 2)  # one free bit flips; pivots follow


def test_known_abelianization_orders():
    cases = [
        (complete_bipartite(3, 3), 16),
        (complete_graph(5), 64),
        (complete_bipartite(3, 4), 64),
        (complete_bipartite(3, 5), 256),
        (complete_bipartite(3, 6), 1024),
    ]
    for g, want in cases:
        assert abelianization_order(g, coloured=False) == want
    for n in range(3, 9):
        assert abelianization_order(wheel_graph(n), coloured=False) == 2 ** n


def test_abelianization_matches_abelianized_enumeration():
    rng = random.Random(23)
    checked = 0
    while checked < 12:
        g = random_multigraph(rng, max_vertices=5, max_edges=8)
        p = gamma_uncoloured(g)
        rels = list(p.relations)
        for a in range(p.ngens):
            for b in range(a + 1, p.ngens):
                rels.append((a, b, a, b))
        ab = make_presentation(p.generators, rels, j_name=None)
        table = enumerate_cosets(ab, max_cosets=200000)
        assert table.status == "closed"
        assert table.order == abelianization_order(g, coloured=False)
        checked += 1


def test_abelianization_exponent_values():
    g = cycle_graph(3)
    assert abelianization_exponent(g, coloured=False) in (1, 2)
    assert abelianization_order(g.with_colour((0, 0, 0)), coloured=True) == \
        2 * abelianization_order(g, coloured=False)
