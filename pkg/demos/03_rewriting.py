#!/usr/bin/env python3
"""String rewriting: normal forms for an infinite solution group.

Coset enumeration answers questions about finite groups.  For infinite ones
we need a different handle: a convergent rewriting system, i.e. a set of
length-reducing-modulo-an-order rules that is terminating and locally
confluent.  Then every group element has exactly one irreducible word, the
word problem becomes "rewrite and compare", and counting irreducible words
of each length measures the group's growth.

The bundled 46-rule system presents H_{3,3}, the row/column subgroup of the
magic square game's solution group, over generators y1..y9.  Termination is
certified against a wreath-product order (compare significant-letter counts,
then recurse blockwise), confluence by joining all critical pairs, and
soundness by reducing every defining relation to the empty word.
"""

from gig.rewriting import (count_normal_forms, find_completion,
                           load_h33_system)
from gig.presentations import gamma, hmn
from gig.graphs import cycle_graph
from gig.cosets import enumerate_cosets

rw = load_h33_system()
print(f"Loaded {len(rw.rules)} rules over {{{', '.join(sorted(rw.alphabet))}}}.")

# Certification: termination + local confluence + relation soundness.
term = rw.check_termination()
conf = rw.check_local_confluence()
rel = rw.check_relations(hmn(3, 3))
print(f"terminating: {term.ok}   "
      f"confluent: {conf.ok} ({conf.pairs} critical pairs joined)   "
      f"relations reduce: {rel.ok}")
assert term.ok and conf.ok and rel.ok

# The word problem, solved: same element iff same normal form.
w1 = ("y1", "y2", "y1")            # conjugate of y2 by the involution y1
w2 = rw.normal_form(w1)
print(f"normal form of y1 y2 y1 = {' '.join(w2)}")
print(f"y4 y5 y6 = 1 in H_{{3,3}}?  "
      f"{rw.normal_form(('y4', 'y5', 'y6')) == ()}")   # a defining relation

# Witness of infiniteness: the powers of y4 y2 y7 are all irreducible, so
# they are pairwise distinct group elements — H_{3,3} is infinite.
for n in (1, 2, 5, 10):
    assert rw.is_irreducible(("y4", "y2", "y7") * n)
print("(y4 y2 y7)^n is irreducible for n = 1, 2, 5, 10: "
      "the group is infinite.")

# Growth: number of elements whose normal form has each length.
census = count_normal_forms(rw, 12)
print(f"normal forms by length 0..12: {census}")
assert census[0] == 1 and all(c > 0 for c in census)

# Knuth-Bendix completion builds such systems from scratch.  For a finite
# group the completed system must count exactly |group| normal forms in
# total — checked here against the coset enumerator.
p = gamma(cycle_graph(3))          # triangle, all-zero colouring
res = find_completion(p, max_orders=40, max_rules=400, seed=0)
print(f"\nKnuth-Bendix on the triangle's solution group: {res.status}, "
      f"{len(res.system.rules)} rules")
assert res.status == "complete"
counts = count_normal_forms(res.system, 24)
order = enumerate_cosets(p).order
print(f"total normal forms = {sum(counts)}, coset enumeration order = {order}")
assert sum(counts) == order and counts[-1] == 0
