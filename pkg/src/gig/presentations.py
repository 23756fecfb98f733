"""Finite presentations over involutive generators, and the solution groups.

Words are tuples of generator ids.  Every generator is an involution; a
presentation may name one generator J, which is central (J^2 and all
commutators with J are forced into the relation list).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ColouredGraph

__all__ = [
    "Word",
    "GroupPresentation",
    "make_presentation",
    "gamma",
    "gamma_uncoloured",
    "hmn",
    "WordMap",
    "parse_presentation",
    "presentation_to_text",
]

Word = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relations: tuple[Word, ...]
    j: int | None = None  # id of the central generator, if any

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def gen_id(self, name: str) -> int:
        return self.generators.index(name)

    def word_from_names(self, names) -> Word:
        index = {nm: i for i, nm in enumerate(self.generators)}
        return tuple(index[nm] for nm in names)

    def word_names(self, w: Word) -> list[str]:
        return [self.generators[i] for i in w]


def make_presentation(generators, relations, j_name: str | None = None) -> GroupPresentation:
    """Build a presentation, forcing involutivity and centrality of J.

    Missing squares g^2 are appended for every generator, and missing
    commutators [g, J] when a central generator is named.  Exact duplicate
    relators are dropped (first occurrence kept).
    """
    gens = tuple(generators)
    if len(set(gens)) != len(gens):
        raise ValueError("duplicate generator names")
    j = None
    if j_name is not None:
        j = gens.index(j_name)
    seen = set()
    rels: list[Word] = []
    for r in relations:
        r = tuple(r)
        if not r:
            continue
        if any(not (0 <= g < len(gens)) for g in r):
            raise ValueError("relation uses unknown generator id")
        if r not in seen:
            seen.add(r)
            rels.append(r)
    for gid in range(len(gens)):
        sq = (gid, gid)
        if sq not in seen:
            seen.add(sq)
            rels.append(sq)
    if j is not None:
        for gid in range(len(gens)):
            if gid == j:
                continue
            comm = (gid, j, gid, j)
            if comm not in seen:
                seen.add(comm)
                rels.append(comm)
    return GroupPresentation(gens, tuple(rels), j)


def _reserved_j_check(g: ColouredGraph):
    if "J" in g.edge_names:
        raise ValueError("edge name 'J' is reserved for the central generator")


def gamma(g: ColouredGraph) -> GroupPresentation:
    """Solution group of the incidence game on (G, b).

    One involutive generator per edge plus central J; edges sharing a vertex
    commute; the edges at v multiply to J^b(v).
    """
    _reserved_j_check(g)
    gens = tuple(g.edge_names) + ("J",)
    j = len(g.edge_names)
    rels: list[Word] = []
    for e in range(g.m):
        rels.append((e, e))
    rels.append((j, j))
    for e in range(g.m):
        rels.append((e, j, e, j))
    for e, f in _adjacent_pairs(g):
        rels.append((e, f, e, f))
    for v in range(g.n):
        w = ((j,) if g.colour[v] else ()) + tuple(g.incident[v])
        if w:
            rels.append(w)
        else:
            # isolated odd vertex: empty product equals J, i.e. J itself
            if g.colour[v]:
                rels.append((j,))
    return GroupPresentation(gens, tuple(rels), j)


def gamma_uncoloured(g: ColouredGraph) -> GroupPresentation:
    """Solution group with J set to 1 (colouring ignored)."""
    gens = tuple(g.edge_names)
    rels: list[Word] = []
    for e in range(g.m):
        rels.append((e, e))
    for e, f in _adjacent_pairs(g):
        rels.append((e, f, e, f))
    for v in range(g.n):
        if g.incident[v]:
            rels.append(tuple(g.incident[v]))
    return GroupPresentation(gens, tuple(rels), None)


def _adjacent_pairs(g: ColouredGraph):
    """Edge pairs sharing a vertex, deduplicated, in first-seen order."""
    seen = set()
    out = []
    for v in range(g.n):
        inc = g.incident[v]
        for i in range(len(inc)):
            for k in range(i + 1, len(inc)):
                p = (inc[i], inc[k])
                if p not in seen:
                    seen.add(p)
                    out.append(p)
    return out


def hmn(m: int, n: int) -> GroupPresentation:
    """The groups H_{m,n}: an n x m matrix of involutions y_1..y_{mn}.

    Rows commute pairwise and multiply to 1; entries in the same column
    (indices congruent mod m) commute.  No column product relations.
    """
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1")
    gens = tuple("y%d" % (i + 1) for i in range(m * n))
    rels: list[Word] = []
    for i in range(m * n):
        rels.append((i, i))
    for j in range(n):
        row = [j * m + i for i in range(m)]
        for a in range(m):
            for b in range(a + 1, m):
                rels.append((row[a], row[b], row[a], row[b]))
    for i in range(m):
        col = [j * m + i for j in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                rels.append((col[a], col[b], col[a], col[b]))
    for j in range(n):
        rels.append(tuple(j * m + i for i in range(m)))
    return make_presentation(gens, rels, None)


@dataclass(frozen=True)
class WordMap:
    """Generator-wise word substitution between presentations."""

    source: GroupPresentation
    target: GroupPresentation
    images: tuple[Word, ...]  # per source generator id
    provenance: str = ""

    def apply(self, w: Word) -> Word:
        out: list[int] = []
        for g in w:
            out.extend(self.images[g])
        return tuple(out)

    def compose(self, then: "WordMap") -> "WordMap":
        """self followed by `then` (targets must chain)."""
        if self.target is not then.source and self.target != then.source:
            raise ValueError("maps do not compose")
        return WordMap(
            self.source,
            then.target,
            tuple(then.apply(im) for im in self.images),
            provenance="%s; %s" % (self.provenance, then.provenance),
        )


# ---------------------------------------------------------------------------
# Text format: `gen <name> [J]` and `rel <name> ...` lines.

def parse_presentation(text: str) -> GroupPresentation:
    gens: list[str] = []
    j_name = None
    rel_lines: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "gen":
            if len(parts) == 2:
                gens.append(parts[1])
            elif len(parts) == 3 and parts[2] == "J":
                gens.append(parts[1])
                if j_name is not None:
                    raise ValueError("line %d: second central generator" % lineno)
                j_name = parts[1]
            else:
                raise ValueError("line %d: expected `gen <name> [J]`" % lineno)
        elif parts[0] == "rel":
            if len(parts) < 2:
                raise ValueError("line %d: empty relation" % lineno)
            rel_lines.append(parts[1:])
        else:
            raise ValueError("line %d: unknown directive %r" % (lineno, parts[0]))
    index = {nm: i for i, nm in enumerate(gens)}
    rels = []
    for names in rel_lines:
        try:
            rels.append(tuple(index[nm] for nm in names))
        except KeyError as exc:
            raise ValueError("relation uses unknown generator %s" % exc) from None
    return make_presentation(gens, rels, j_name)


def presentation_to_text(p: GroupPresentation) -> str:
    lines = []
    for i, nm in enumerate(p.generators):
        lines.append("gen %s J" % nm if i == p.j else "gen %s" % nm)
    for r in p.relations:
        lines.append("rel " + " ".join(p.generators[g] for g in r))
    return "\n".join(lines) + "\n"
