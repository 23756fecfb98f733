#!/usr/bin/env python3
"""Exact group orders by Todd-Coxeter coset enumeration.

The solution group of a graph incidence game is given by a finite
presentation: one involution per edge, a central element J, commutation of
edges sharing a vertex, and one product relation per vertex.  Coset
enumeration over the trivial subgroup computes |Gamma| exactly whenever the
group is finite — and the resulting multiplication table doubles as a
brute-force oracle for every other question (is J = 1?  abelian?).

Orders fall out in closed form for familiar families, so they make sharp
regression targets: the uncoloured groups of the complete bipartite graphs
K_{3,3}, K_{3,4}, K_{3,5} have orders 16, 256, 8192, the complete graph K_5
gives 64, and the wheel W_n gives exactly 2^n.
"""

import time

from gig.graphs import complete_bipartite, complete_graph, wheel_graph
from gig.presentations import gamma_uncoloured
from gig.cosets import enumerate_cosets
from gig.classify import order_exact


def order_of(name, g):
    t0 = time.perf_counter()
    table = enumerate_cosets(gamma_uncoloured(g))
    dt = time.perf_counter() - t0
    print(f"  |Gamma({name})| = {table.order:<6} "
          f"({table.allocated} cosets allocated, {dt:.2f} s)")
    return table


print("Complete bipartite and complete graphs:")
t33 = order_of("K_{3,3}", complete_bipartite(3, 3))
t5 = order_of("K_5", complete_graph(5))
t34 = order_of("K_{3,4}", complete_bipartite(3, 4))
t35 = order_of("K_{3,5}", complete_bipartite(3, 5))
assert [t.order for t in (t33, t5, t34, t35)] == [16, 64, 256, 8192]

print("\nWheels (hub joined to an n-cycle), |Gamma(W_n)| = 2^n:")
for n in range(3, 9):
    t = order_of(f"W_{n}", wheel_graph(n))
    assert t.order == 2 ** n

# The multiplication table is an oracle, not just a number.  Enumerate the
# coloured group of the magic square game and ask it whether the central
# element J survives and whether the group is abelian.
from gig.graphs import parse_colour_spec
from gig.presentations import gamma

todd = enumerate_cosets(gamma(parse_colour_spec(complete_bipartite(3, 3),
                                                "odd")))
print(f"\nK_{{3,3}} odd-coloured oracle: order {todd.order},  "
      f"J trivial? {todd.j_is_trivial()},  abelian? {todd.is_abelian()}")
assert todd.order == 32 and not todd.j_is_trivial()
assert not todd.is_abelian() and t33.is_abelian()

# K_{3,6} has two vertex-disjoint cycles, so its group is infinite: the
# enumeration cannot close at any finite cap.  A million cosets in, it is
# still growing — which is exactly the point.
t0 = time.perf_counter()
t36 = enumerate_cosets(gamma_uncoloured(complete_bipartite(3, 6)),
                       max_cosets=1_000_000)
print(f"\nK_{{3,6}} at a cap of 10^6 cosets: status {t36.status!r} "
      f"({time.perf_counter() - t0:.1f} s) — the group is infinite.")
assert t36.status == "overflowed"

# `order_exact` wraps of all this with colouring handling.
res = order_exact(complete_bipartite(3, 4))   # coloured: all-zero colouring
print(f"\norder_exact(K_{{3,4}}, zero colouring) = {res.order}")
assert res.order == 512    # = 2 x 256: the zero colouring adjoins a fresh J
