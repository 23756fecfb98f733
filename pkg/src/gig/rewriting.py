"""String rewriting over involutive generator alphabets.

A rewriting system is a list of (lhs, rhs) word pairs over a finite
alphabet.  Completeness is never trusted from construction: termination is
certified against a wreath product reduction order, local confluence by
exhaustive critical pair analysis, and correctness for a presentation by
reducing every defining relator to the empty word.  A certified system
puts group elements in bijection with its irreducible words, which a small
automaton can then count by length.
"""

from __future__ import annotations

import hashlib
import time
from collections import deque
from dataclasses import dataclass
from importlib import resources

from .presentations import GroupPresentation, Word

__all__ = [
    "WreathOrder",
    "RewriteSystem",
    "TerminationReport",
    "CriticalPair",
    "ConfluenceReport",
    "RelationReport",
    "KBResult",
    "knuth_bendix",
    "find_completion",
    "count_normal_forms",
    "load_h33_system",
    "H33_SHA256",
]

H33_SHA256 = "397af7e6b89d9d6bd1ef70f29126f8da96360f909ea7c557af88072ca86dcb13"


class WreathOrder:
    """Wreath product order for a generator sequence, least first.

    Words are compared on the count of the most significant generator; on a
    tie both words are split at that generator and the blocks compared
    left to right with the order on the remaining generators.  Words over
    one generator compare by length.  Total on words over the sequence.
    """

    def __init__(self, sequence):
        self.sequence = tuple(sequence)
        if len(set(self.sequence)) != len(self.sequence):
            raise ValueError("order sequence repeats a generator")
        self._rank = {g: i for i, g in enumerate(self.sequence)}

    def compare(self, a: Word, b: Word) -> int:
        """-1, 0, or 1 as a < b, a == b, a > b."""
        for w in (a, b):
            for g in w:
                if g not in self._rank:
                    raise ValueError(f"generator {g!r} not in order sequence")
        return self._cmp(tuple(a), tuple(b), len(self.sequence) - 1)

    def _cmp(self, a: Word, b: Word, k: int) -> int:
        if k < 0:
            return 0
        s = self.sequence[k]
        ca = a.count(s)
        cb = b.count(s)
        if ca != cb:
            return -1 if ca < cb else 1
        ai = bi = 0
        for _ in range(ca + 1):
            aj = _find(a, s, ai)
            bj = _find(b, s, bi)
            c = self._cmp(a[ai:aj], b[bi:bj], k - 1)
            if c:
                return c
            ai, bi = aj + 1, bj + 1
        return 0


def _find(w: Word, s: str, start: int) -> int:
    for i in range(start, len(w)):
        if w[i] == s:
            return i
    return len(w)


def wreath_compare(a: Word, b: Word, sequence) -> int:
    return WreathOrder(sequence).compare(a, b)


def _rewrite(word: Word, rules, by_first, max_lhs: int, max_steps=None):
    """Leftmost rewriting: earliest start, then shortest lhs, then lowest
    rule index.  After a rewrite the scan resumes max_lhs-1 letters back,
    which preserves the leftmost invariant."""
    w = list(word)
    steps = 0
    i = 0
    while i < len(w):
        hit = None
        for idx in by_first.get(w[i], ()):
            lhs, rhs = rules[idx]
            if w[i:i + len(lhs)] == list(lhs):
                hit = (lhs, rhs)
                break
        if hit is None:
            i += 1
            continue
        lhs, rhs = hit
        w[i:i + len(lhs)] = list(rhs)
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise RuntimeError("rewriting step limit exceeded")
        i = max(0, i - max_lhs + 1)
    return tuple(w)


def _index_rules(rules):
    """Rule indices by first lhs letter, shortest lhs first then by index."""
    by_first: dict[str, list[int]] = {}
    for idx, (lhs, _) in enumerate(rules):
        by_first.setdefault(lhs[0], []).append(idx)
    for lst in by_first.values():
        lst.sort(key=lambda idx: (len(rules[idx][0]), idx))
    return by_first


@dataclass(frozen=True)
class TerminationReport:
    ok: bool
    violations: tuple


@dataclass(frozen=True)
class CriticalPair:
    word: Word
    first: Word
    second: Word
    first_nf: Word
    second_nf: Word
    rule_a: int
    rule_b: int


@dataclass(frozen=True)
class ConfluenceReport:
    ok: bool
    pairs: int
    counterexample: CriticalPair | None


@dataclass(frozen=True)
class RelationReport:
    ok: bool
    failures: tuple


class RewriteSystem:
    """Immutable rule list with an optional reduction order."""

    def __init__(self, alphabet, rules, order: WreathOrder | None = None):
        self.alphabet = tuple(alphabet)
        aset = set(self.alphabet)
        if len(aset) != len(self.alphabet):
            raise ValueError("alphabet repeats a generator")
        clean = []
        for lhs, rhs in rules:
            lhs = tuple(lhs)
            rhs = tuple(rhs)
            if not lhs:
                raise ValueError("rule with empty left side")
            if lhs == rhs:
                raise ValueError("rule rewrites a word to itself")
            for g in lhs + rhs:
                if g not in aset:
                    raise ValueError(f"rule uses unknown generator {g!r}")
            clean.append((lhs, rhs))
        self.rules = tuple(clean)
        self.order = order
        self._max_lhs = max((len(l) for l, _ in self.rules), default=1)
        self._by_first = _index_rules(self.rules)

    def __len__(self):
        return len(self.rules)

    def normal_form(self, word: Word, max_steps=None) -> Word:
        return _rewrite(word, self.rules, self._by_first, self._max_lhs,
                        max_steps)

    def is_irreducible(self, word: Word) -> bool:
        word = tuple(word)
        for lhs, _ in self.rules:
            for i in range(len(word) - len(lhs) + 1):
                if word[i:i + len(lhs)] == lhs:
                    return False
        return True

    def check_termination(self) -> TerminationReport:
        """Every rule must strictly reduce under the order."""
        if self.order is None:
            raise ValueError("no reduction order attached")
        bad = tuple(
            i for i, (lhs, rhs) in enumerate(self.rules)
            if self.order.compare(rhs, lhs) != -1
        )
        return TerminationReport(ok=not bad, violations=bad)

    def check_local_confluence(self, max_steps=100_000) -> ConfluenceReport:
        """Join every overlap and inclusion critical pair.

        Overlaps: a suffix of one lhs equals a prefix of another (self
        overlaps included).  Inclusions: one lhs occurs inside another.
        By Newman's lemma a terminating locally confluent system is
        confluent.
        """
        pairs = 0
        for word, red1, red2, i, j in _critical_pairs(self.rules):
            pairs += 1
            n1 = self.normal_form(red1, max_steps)
            n2 = self.normal_form(red2, max_steps)
            if n1 != n2:
                return ConfluenceReport(
                    ok=False, pairs=pairs,
                    counterexample=CriticalPair(word, red1, red2, n1, n2, i, j))
        return ConfluenceReport(ok=True, pairs=pairs, counterexample=None)

    def check_relations(self, p: GroupPresentation,
                        max_steps=100_000) -> RelationReport:
        """Every defining relator (squares included) must reduce to the
        empty word, and the presentation must use this alphabet."""
        missing = [g for g in p.generators if g not in set(self.alphabet)]
        if missing:
            raise ValueError(f"presentation generators {missing} not in alphabet")
        failures = []
        for rel in p.relations:
            word = tuple(p.word_names(rel))
            nf = self.normal_form(word, max_steps)
            if nf != ():
                failures.append((word, nf))
        return RelationReport(ok=not failures, failures=tuple(failures))

    def certify(self, p: GroupPresentation) -> bool:
        """All three checks; raises if no order is attached."""
        return (self.check_termination().ok
                and self.check_local_confluence().ok
                and self.check_relations(p).ok)


def _overlap_pairs(l1, r1, i, l2, r2, j):
    """Proper overlaps: suffix of l1 = prefix of l2."""
    out = []
    for o in range(1, min(len(l1), len(l2))):
        if l1[-o:] == l2[:o]:
            word = l1 + l2[o:]
            out.append((word, r1 + l2[o:], l1[:-o] + r2, i, j))
    return out


def _inclusion_pairs(l1, r1, i, l2, r2, j):
    """l2 occurring inside l1 (identical rules excluded)."""
    out = []
    for t in range(len(l1) - len(l2) + 1):
        if i == j and len(l1) == len(l2):
            continue
        if l1[t:t + len(l2)] == l2:
            out.append((l1, r1, l1[:t] + r2 + l1[t + len(l2):], i, j))
    return out


def _critical_pairs(rules):
    for i, (l1, r1) in enumerate(rules):
        for j, (l2, r2) in enumerate(rules):
            yield from _overlap_pairs(l1, r1, i, l2, r2, j)
            yield from _inclusion_pairs(l1, r1, i, l2, r2, j)


@dataclass(frozen=True)
class KBResult:
    status: str  # complete | exhausted
    system: RewriteSystem | None
    equations: int
    rules_peak: int


def knuth_bendix(p: GroupPresentation, order: WreathOrder,
                 max_rules: int = 2000, max_len: int = 200,
                 certify: bool = True,
                 max_seconds: float | None = None) -> KBResult:
    """Completion for an involutive presentation under a reduction order.

    Orients each equation after normalising both sides, interreduces the
    rule set, and queues all critical pairs of every new rule.  Returns
    exhausted when the rule count, the equation length cap, or the
    wall-clock budget is hit.  A complete result is certified with the
    independent checks unless certify is False.
    """
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    alphabet = p.generators
    eqs = deque((tuple(p.word_names(rel)), ()) for rel in p.relations)
    rules: list = []
    active: list[bool] = []
    equations = 0
    peak = 0

    def live():
        return [rules[k] for k in range(len(rules)) if active[k]]

    def nf(word):
        cur = live()
        if not cur:
            return tuple(word)
        by_first = _index_rules(cur)
        max_lhs = max(len(l) for l, _ in cur)
        return _rewrite(word, cur, by_first, max_lhs)

    while eqs:
        if deadline is not None and time.monotonic() > deadline:
            return KBResult("exhausted", None, equations, peak)
        a, b = eqs.popleft()
        equations += 1
        a = nf(a)
        b = nf(b)
        if a == b:
            continue
        if order.compare(a, b) > 0:
            lhs, rhs = a, b
        else:
            lhs, rhs = b, a
        if len(lhs) > max_len:
            return KBResult("exhausted", None, equations, peak)
        new_idx = len(rules)
        rules.append((lhs, rhs))
        active.append(True)
        peak = max(peak, sum(active))
        if peak > max_rules:
            return KBResult("exhausted", None, equations, peak)
        for k in range(new_idx):
            if not active[k]:
                continue
            kl, kr = rules[k]
            if any(kl[t:t + len(lhs)] == lhs
                   for t in range(len(kl) - len(lhs) + 1)):
                active[k] = False
                eqs.append((kl, kr))
            elif any(kr[t:t + len(lhs)] == lhs
                     for t in range(len(kr) - len(lhs) + 1)):
                eqs.append((kl, kr))
                active[k] = False
        for k in range(len(rules)):
            if not active[k]:
                continue
            kl, kr = rules[k]
            for word, red1, red2, _, _ in _overlap_pairs(
                    lhs, rhs, new_idx, kl, kr, k):
                eqs.append((red1, red2))
            if k != new_idx:
                for word, red1, red2, _, _ in _overlap_pairs(
                        kl, kr, k, lhs, rhs, new_idx):
                    eqs.append((red1, red2))
                for word, red1, red2, _, _ in _inclusion_pairs(
                        kl, kr, k, lhs, rhs, new_idx):
                    eqs.append((red1, red2))
                for word, red1, red2, _, _ in _inclusion_pairs(
                        lhs, rhs, new_idx, kl, kr, k):
                    eqs.append((red1, red2))

    final = live()
    final.sort(key=lambda rule: (len(rule[0]), rule[0]))
    system = RewriteSystem(alphabet, final, order)
    if certify and not system.certify(p):
        return KBResult("exhausted", None, equations, peak)
    return KBResult("complete", system, equations, peak)


def find_completion(p: GroupPresentation, max_orders: int = 24,
                    max_rules: int = 2000, max_len: int = 200,
                    seed: int = 0,
                    max_seconds: float | None = None) -> KBResult:
    """Try wreath orders over generator sequences until one completes.

    Candidates: the generator list, its reverse, then seeded shuffles.
    The optional wall-clock budget is shared across all attempts.
    """
    import random

    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    rng = random.Random(seed)
    gens = list(p.generators)
    tried = set()
    candidates = [tuple(gens), tuple(reversed(gens))]
    while len(candidates) < max_orders:
        perm = gens[:]
        rng.shuffle(perm)
        if tuple(perm) not in set(candidates):
            candidates.append(tuple(perm))
        if len(candidates) >= 2 ** min(len(gens), 16):
            break
    last = KBResult("exhausted", None, 0, 0)
    for seq in candidates:
        if seq in tried:
            continue
        tried.add(seq)
        remaining = None
        if deadline is not None:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                return last
        res = knuth_bendix(p, WreathOrder(seq), max_rules, max_len,
                           max_seconds=remaining)
        if res.status == "complete":
            return res
        last = res
    return last


def count_normal_forms(system: RewriteSystem, max_length: int) -> list[int]:
    """Irreducible word counts per length 0..max_length.

    Builds the pattern automaton of all left sides (trie plus failure
    links) and counts walks that never complete a left side.  For a
    complete system this is a census of group elements by normal form
    length.
    """
    lhss = [l for l, _ in system.rules]
    # trie states: dict letter -> state, plus failure and terminal flags
    goto: list[dict] = [{}]
    fail = [0]
    term = [False]
    for lhs in lhss:
        s = 0
        for g in lhs:
            if g not in goto[s]:
                goto.append({})
                fail.append(0)
                term.append(False)
                goto[s][g] = len(goto) - 1
            s = goto[s][g]
        term[s] = True
    queue = deque()
    for g, s in goto[0].items():
        fail[s] = 0
        queue.append(s)
    while queue:
        s = queue.popleft()
        for g, t in goto[s].items():
            f = fail[s]
            while f and g not in goto[f]:
                f = fail[f]
            fail[t] = goto[f][g] if g in goto[f] and goto[f][g] != t else 0
            term[t] = term[t] or term[fail[t]]
            queue.append(t)

    def step(s, g):
        while s and g not in goto[s]:
            s = fail[s]
        return goto[s].get(g, 0)

    trans = [{g: step(s, g) for g in system.alphabet}
             for s in range(len(goto))]
    counts = [0] * (max_length + 1)
    ways = {0: 1}
    counts[0] = 1
    for length in range(1, max_length + 1):
        nxt: dict[int, int] = {}
        for s, c in ways.items():
            for g in system.alphabet:
                t = trans[s][g]
                if term[t]:
                    continue
                nxt[t] = nxt.get(t, 0) + c
        ways = nxt
        counts[length] = sum(ways.values())
    return counts


def _parse_system(text: str) -> RewriteSystem:
    alphabet = None
    order = None
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "alphabet":
            alphabet = tuple(parts[1:])
        elif parts[0] == "order":
            order = WreathOrder(parts[1:])
        elif parts[0] == "rule":
            if "->" not in parts:
                raise ValueError(f"line {lineno}: rule without ->")
            k = parts.index("->")
            lhs = tuple(parts[1:k])
            rhs_part = parts[k + 1:]
            rhs = () if rhs_part == ["1"] else tuple(rhs_part)
            rules.append((lhs, rhs))
        else:
            raise ValueError(f"line {lineno}: unknown directive {parts[0]!r}")
    if alphabet is None:
        raise ValueError("no alphabet line")
    return RewriteSystem(alphabet, rules, order)


def load_h33_system() -> RewriteSystem:
    """The bundled 46-rule system for the three-by-three grid group.

    The file checksum is pinned; a mismatch means the data was edited and
    every downstream certification would be meaningless.
    """
    data = resources.files("gig").joinpath("data/h33_rules.txt").read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if digest != H33_SHA256:
        raise RuntimeError(
            f"bundled rule table checksum mismatch: {digest}")
    return _parse_system(data.decode())
