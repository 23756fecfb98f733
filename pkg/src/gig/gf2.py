"""GF(2) linear algebra on bit-packed rows, and the classical game oracle.

Rows are Python ints used as bitsets (bit j = column j), so word-level XOR
does the elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ColouredGraph, component_ids

__all__ = [
    "Gf2Matrix",
    "incidence_matrix",
    "classical_solvable",
    "Unsolvable",
    "solve_and_enumerate",
    "SolutionSet",
    "abelianization_exponent",
    "abelianization_order",
]

DEFAULT_ENUM_CAP = 1 << 20


class Unsolvable(Exception):
    """The incidence system I(G) x = b has no solution over GF(2)."""


@dataclass
class Gf2Matrix:
    rows: list[int]
    ncols: int

    @classmethod
    def from_bits(cls, bits) -> "Gf2Matrix":
        """Build from an iterable of 0/1 row sequences."""
        rows = []
        ncols = 0
        for r in bits:
            r = list(r)
            ncols = max(ncols, len(r))
            acc = 0
            for j, b in enumerate(r):
                if b:
                    acc |= 1 << j
            rows.append(acc)
        return cls(rows, ncols)

    def row_bits(self, i: int) -> list[int]:
        return [(self.rows[i] >> j) & 1 for j in range(self.ncols)]

    def copy(self) -> "Gf2Matrix":
        return Gf2Matrix(list(self.rows), self.ncols)

    def rank(self) -> int:
        return _eliminate(list(self.rows))[0]


def _eliminate(rows: list[int]):
    """In-place forward elimination; returns (rank, pivot columns, rows)."""
    pivots = []
    r = 0
    col = 0
    nrows = len(rows)
    maxbits = max(rows).bit_length() if rows else 0
    while r < nrows and col < maxbits:
        sel = -1
        for i in range(r, nrows):
            if (rows[i] >> col) & 1:
                sel = i
                break
        if sel < 0:
            col += 1
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(nrows):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
        col += 1
    return r, pivots, rows


def incidence_matrix(g: ColouredGraph) -> Gf2Matrix:
    """|V| x |E| incidence matrix; column order is the edge list."""
    rows = []
    for v in range(g.n):
        acc = 0
        for e in g.incident[v]:
            acc |= 1 << e
        rows.append(acc)
    return Gf2Matrix(rows, g.m)


def classical_solvable(g: ColouredGraph) -> bool:
    """Perfect classical strategy exists iff every component's colouring is even."""
    return all(g.parity(cv) == 0 for cv, _ in component_ids(g))


@dataclass
class SolutionSet:
    assignments: list[dict[int, int]]  # edge id -> bit, Gray-code order
    count: int                         # full count 2^(|E| - rank)
    truncated: bool


def solve_and_enumerate(g: ColouredGraph, cap: int = DEFAULT_ENUM_CAP) -> SolutionSet:
    """All solutions of I(G) x = b(G), or raise Unsolvable.

    Free variables are stepped in Gray-code order so consecutive assignments
    differ in one free bit.  At most `cap` assignments are materialised.
    """
    m = g.m
    aug = incidence_matrix(g)
    rows = [aug.rows[v] | (g.colour[v] << m) for v in range(g.n)]
    rank, pivots, rows = _eliminate(rows)
    if any(p == m for p in pivots):
        raise Unsolvable("colouring has odd parity on some component")
    nfree = m - rank
    count = 1 << nfree
    pivset = set(pivots)
    free = [j for j in range(m) if j not in pivset]
    # particular solution: free vars 0, pivot j takes the row's augmented bit
    base = 0
    for i, p in enumerate(pivots):
        if (rows[i] >> m) & 1:
            base |= 1 << p
    # nullspace basis vector for each free column
    basis = []
    for f in free:
        vec = 1 << f
        for i, p in enumerate(pivots):
            if (rows[i] >> f) & 1:
                vec |= 1 << p
        basis.append(vec)
    out = []
    x = base
    limit = min(count, cap)
    for k in range(limit):
        out.append({e: (x >> e) & 1 for e in range(m)})
        if k + 1 == limit:
            break
        # Gray code: flip the basis vector at the lowest set bit of k+1
        x ^= basis[((k + 1) & -(k + 1)).bit_length() - 1]
    return SolutionSet(out, count, truncated=count > cap)


def abelianization_exponent(g: ColouredGraph, coloured: bool) -> int:
    """k with |abelianisation| = 2^k.

    Uncoloured: generators are the edges, relations the incidence rows, so
    k = |E| - rank I(G).  Coloured: J is one more generator and the rows are
    augmented by b, so k = |E| + 1 - rank (I(G) | b).
    """
    inc = incidence_matrix(g)
    if not coloured:
        return g.m - inc.rank()
    rows = [inc.rows[v] | (g.colour[v] << g.m) for v in range(g.n)]
    rank, _, _ = _eliminate(rows)
    return g.m + 1 - rank


def abelianization_order(g: ColouredGraph, coloured: bool) -> int:
    return 1 << abelianization_exponent(g, coloured)
