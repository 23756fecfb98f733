"""Solution groups of graph incidence games.

Classification of perfect-strategy existence, triviality, finiteness and
abelianness by forbidden minors, cross-validated against exact oracles
(coset enumeration, GF(2) linear algebra, string rewriting, pictures,
explicit quantum strategies).
"""

__version__ = "0.1.0"
