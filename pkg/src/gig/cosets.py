"""Todd-Coxeter coset enumeration over the trivial subgroup.

All generators are involutions, so the table needs one column per generator
and every assignment is installed symmetrically.  The default strategy is
HLT (relator scanning with gap filling); a Felsch-style deduction strategy
sits behind a flag as a slow reference.  Enumeration is deterministic: same
presentation and cap, same table.

Overflow means the cap was hit and says nothing about infiniteness.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field

from .presentations import GroupPresentation

__all__ = ["CosetTable", "enumerate_cosets", "EnumerationError"]

DEFAULT_MAX_COSETS = 2_000_000


class EnumerationError(RuntimeError):
    pass


@dataclass
class CosetTable:
    presentation: GroupPresentation
    status: str                    # "closed" | "overflowed"
    max_cosets: int
    strategy: str
    allocated: int                 # cosets ever defined
    order: int | None = None       # live cosets, closed tables only
    table: array | None = None     # compacted, row-major, order x ngens
    audit_ok: bool | None = None

    def trace(self, word, start: int = 0) -> int:
        """Right action of `word` on coset `start` (closed tables)."""
        if self.status != "closed":
            raise EnumerationError("trace requires a closed table")
        G = self.presentation.ngens
        t = self.table
        c = start
        for g in word:
            c = t[c * G + g]
        return c

    def perm(self, g: int) -> tuple:
        """Permutation induced by generator g on the compacted cosets."""
        if self.status != "closed":
            raise EnumerationError("perm requires a closed table")
        G = self.presentation.ngens
        t = self.table
        return tuple(t[c * G + g] for c in range(self.order))

    def words_equal(self, w1, w2, audit: bool = True) -> bool:
        """Equality in the group.

        The regular action over the trivial subgroup is faithful, so the
        terminal coset of coset 0 decides; the permutation comparison is a
        redundant audit.
        """
        same = self.trace(w1) == self.trace(w2)
        if audit:
            perm_same = all(
                self.trace(w1, c) == self.trace(w2, c) for c in range(self.order)
            )
            if perm_same != same:
                raise EnumerationError("regular action audit contradicts terminal coset")
        return same

    def word_is_identity(self, w) -> bool:
        return self.trace(w) == 0

    def j_is_trivial(self) -> bool:
        if self.presentation.j is None:
            raise EnumerationError("presentation has no central generator")
        return self.trace((self.presentation.j,)) == 0

    def is_abelian(self) -> bool:
        G = self.presentation.ngens
        for a in range(G):
            for b in range(a + 1, G):
                if self.trace((a, b, a, b)) != 0:
                    return False
        return True

    def audit(self) -> bool:
        """Every relation closes from every coset; involutive symmetry holds."""
        if self.status != "closed":
            raise EnumerationError("audit requires a closed table")
        G = self.presentation.ngens
        t = self.table
        n = self.order
        for c in range(n * G):
            if not (0 <= t[c] < n):
                return False
        for g in range(G):
            for c in range(n):
                if t[t[c * G + g] * G + g] != c:
                    return False
        for rel in self.presentation.relations:
            for c in range(n):
                f = c
                for g in rel:
                    f = t[f * G + g]
                if f != c:
                    return False
        return True

    def export_mult_table(self) -> dict:
        """Permutation action per generator; refuse beyond 2^16 cosets."""
        if self.status != "closed":
            raise EnumerationError("export requires a closed table")
        if self.order > 1 << 16:
            raise EnumerationError("table too large to export (> 2^16)")
        return {
            "order": self.order,
            "generators": {
                nm: list(self.perm(g))
                for g, nm in enumerate(self.presentation.generators)
            },
        }


def enumerate_cosets(
    p: GroupPresentation,
    max_cosets: int = DEFAULT_MAX_COSETS,
    strategy: str = "hlt",
) -> CosetTable:
    if strategy == "hlt":
        return _enumerate_hlt(p, max_cosets)
    if strategy == "felsch":
        return _enumerate_felsch(p, max_cosets)
    raise ValueError("unknown strategy %r" % strategy)


def _check_involutive(p: GroupPresentation):
    rels = set(p.relations)
    for g in range(p.ngens):
        if (g, g) not in rels:
            raise EnumerationError(
                "generator %s has no square relation; enumerator requires involutions"
                % p.generators[g]
            )


def _enumerate_hlt(p: GroupPresentation, max_cosets: int) -> CosetTable:
    _check_involutive(p)
    G = p.ngens
    rels = [tuple(r) for r in p.relations]
    t = array("i")
    blank = array("i", [-1]) * G
    par = array("i")

    def new_coset():
        c = len(par)
        if c >= max_cosets:
            raise _Overflow
        par.append(c)
        t.extend(blank)
        return c

    def find(c):
        while par[c] != c:
            par[c] = par[par[c]]
            c = par[c]
        return c

    def coincidence(a, b):
        q = [(a, b)]
        while q:
            a, b = q.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            par[b] = a
            rb = b * G
            ra = a * G
            for g in range(G):
                d = t[rb + g]
                if d < 0:
                    continue
                t[rb + g] = -1
                if t[d * G + g] == b:
                    t[d * G + g] = -1
                d = find(d)
                e = t[ra + g]
                if e < 0:
                    t[ra + g] = d
                    e2 = t[d * G + g]
                    if e2 < 0:
                        t[d * G + g] = a
                    else:
                        q.append((e2, a))
                else:
                    q.append((e, d))

    def scan_and_fill(c, rel):
        f = c
        i = 0
        b = c
        j = len(rel) - 1
        while True:
            while i <= j:
                d = t[f * G + rel[i]]
                if d < 0:
                    break
                f = d
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                d = t[b * G + rel[j]]
                if d < 0:
                    break
                b = d
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                g = rel[i]
                t[f * G + g] = b
                t[b * G + g] = f
                return
            g = rel[i]
            n = new_coset()
            t[f * G + g] = n
            t[n * G + g] = f
            f = n
            i += 1

    status = "closed"
    try:
        new_coset()
        c = 0
        while c < len(par):
            if par[c] == c:
                for rel in rels:
                    scan_and_fill(c, rel)
                    if par[c] != c:
                        break
            c += 1
    except _Overflow:
        status = "overflowed"

    allocated = len(par)
    if status != "closed":
        return CosetTable(p, "overflowed", max_cosets, "hlt", allocated)
    return _compact(p, t, par, G, max_cosets, "hlt", allocated)


class _Overflow(Exception):
    pass


def _compact(p, t, par, G, max_cosets, strategy, allocated) -> CosetTable:
    def find(c):
        while par[c] != c:
            par[c] = par[par[c]]
            c = par[c]
        return c

    live = [c for c in range(len(par)) if par[c] == c]
    remap = {c: i for i, c in enumerate(live)}
    out = array("i", [-1]) * (len(live) * G)
    for i, c in enumerate(live):
        for g in range(G):
            d = t[c * G + g]
            if d < 0:
                raise EnumerationError("closed table has an undefined entry")
            out[i * G + g] = remap[find(d)]
    tab = CosetTable(
        p, "closed", max_cosets, strategy, allocated, order=len(live), table=out
    )
    tab.audit_ok = tab.audit()
    if not tab.audit_ok:
        raise EnumerationError("post-closure audit failed")
    return tab


def _enumerate_felsch(p: GroupPresentation, max_cosets: int) -> CosetTable:
    """Deduction-driven reference strategy.  Slower; used for cross-checks."""
    _check_involutive(p)
    G = p.ngens
    rels = [tuple(r) for r in p.relations]
    # rotations of each relator grouped by leading generator
    by_gen: list[list[tuple]] = [[] for _ in range(G)]
    for rel in rels:
        for k in range(len(rel)):
            rot = rel[k:] + rel[:k]
            by_gen[rot[0]].append(rot)
    t = array("i")
    blank = array("i", [-1]) * G
    par = array("i")

    def new_coset():
        c = len(par)
        if c >= max_cosets:
            raise _Overflow
        par.append(c)
        t.extend(blank)
        return c

    def find(c):
        while par[c] != c:
            par[c] = par[par[c]]
            c = par[c]
        return c

    deductions: list[tuple] = []

    def coincidence(a, b):
        q = [(a, b)]
        while q:
            a, b = q.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            par[b] = a
            rb, ra = b * G, a * G
            for g in range(G):
                d = t[rb + g]
                if d < 0:
                    continue
                t[rb + g] = -1
                if t[d * G + g] == b:
                    t[d * G + g] = -1
                d = find(d)
                e = t[ra + g]
                if e < 0:
                    t[ra + g] = d
                    e2 = t[d * G + g]
                    if e2 < 0:
                        t[d * G + g] = a
                    else:
                        q.append((e2, a))
                else:
                    q.append((e, d))
                deductions.append((a, g))

    def scan(c, rel):
        """Deduction-only scan (no filling)."""
        f = c
        i = 0
        b = c
        j = len(rel) - 1
        while i <= j:
            d = t[f * G + rel[i]]
            if d < 0:
                break
            f = d
            i += 1
        if i > j:
            if f != b:
                coincidence(f, b)
            return
        while j >= i:
            d = t[b * G + rel[j]]
            if d < 0:
                break
            b = d
            j -= 1
        if j < i:
            coincidence(f, b)
        elif j == i:
            g = rel[i]
            t[f * G + g] = b
            t[b * G + g] = f
            deductions.append((f, g))

    def drain():
        while deductions:
            c, g = deductions.pop()
            c = find(c)
            for rot in by_gen[g]:
                scan(c, rot)
                c = find(c)

    status = "closed"
    try:
        new_coset()
        while True:
            slot = None
            for c in range(len(par)):
                if par[c] != c:
                    continue
                row = c * G
                for g in range(G):
                    if t[row + g] < 0:
                        slot = (c, g)
                        break
                if slot:
                    break
            if slot is None:
                break
            c, g = slot
            n = new_coset()
            t[c * G + g] = n
            t[n * G + g] = c
            deductions.append((c, g))
            drain()
    except _Overflow:
        status = "overflowed"

    allocated = len(par)
    if status != "closed":
        return CosetTable(p, "overflowed", max_cosets, "felsch", allocated)
    return _compact(p, t, par, G, max_cosets, "felsch", allocated)
