"""Shared fixtures: exhaustive small-graph families and random generators."""

from __future__ import annotations

import itertools
import random

import pytest

from gig.graphs import ColouredGraph, build_graph


def _connected(n: int, mult: dict) -> bool:
    if n == 1:
        return True
    adj = {i: set() for i in range(n)}
    for (u, v), k in mult.items():
        if k:
            adj[u].add(v)
            adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def _canonical(n: int, mult: dict) -> tuple:
    """Least edge-multiset over all vertex relabellings."""
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(
            ((min(perm[u], perm[v]), max(perm[u], perm[v])), k)
            for (u, v), k in mult.items() if k))
        if best is None or key < best:
            best = key
    return best


def _build(n: int, canon: tuple) -> ColouredGraph:
    vertices = [(f"v{i}", 0) for i in range(n)]
    edges = []
    idx = 0
    for (u, v), k in canon:
        for _ in range(k):
            edges.append((f"e{idx}", f"v{u}", f"v{v}"))
            idx += 1
    return build_graph(vertices, edges)


def connected_multigraphs(max_vertices: int, max_edges: int):
    """All connected loopless multigraphs up to isomorphism."""
    out = []
    for n in range(1, max_vertices + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        seen = set()
        min_edges = n - 1
        if min_edges > max_edges:
            continue

        def fill(i, remaining, mult):
            if i == len(pairs):
                if _connected(n, mult):
                    canon = _canonical(n, mult)
                    if canon not in seen:
                        seen.add(canon)
                        out.append(_build(n, canon))
                return
            # pruning: not enough remaining capacity to connect n vertices
            for k in range(remaining + 1):
                mult[pairs[i]] = k
                fill(i + 1, remaining - k, mult)
            del mult[pairs[i]]

        if n == 1:
            out.append(_build(1, ()))
            continue
        fill(0, max_edges, {})
    return out


_FAMILY_CACHE: dict = {}


def family(max_vertices=5, max_edges=7):
    key = (max_vertices, max_edges)
    if key not in _FAMILY_CACHE:
        _FAMILY_CACHE[key] = connected_multigraphs(max_vertices, max_edges)
    return _FAMILY_CACHE[key]


@pytest.fixture(scope="session")
def small_family():
    """Exhaustive: connected multigraphs, <=5 vertices, <=7 edges, up to iso."""
    return family(5, 7)


@pytest.fixture(scope="session")
def tiny_family():
    """Exhaustive: connected multigraphs, <=4 vertices, <=5 edges, up to iso."""
    return family(4, 5)


def random_multigraph(rng: random.Random, max_vertices=8, max_edges=12,
                      connected=False) -> ColouredGraph:
    """Random loopless multigraph (optionally forced connected)."""
    while True:
        n = rng.randint(2, max_vertices)
        m = rng.randint(0 if not connected else n - 1, max_edges)
        vertices = [(f"v{i}", 0) for i in range(n)]
        edges = []
        if connected:
            order = list(range(n))
            rng.shuffle(order)
            for i in range(1, n):
                a = order[rng.randrange(i)]
                edges.append((f"e{len(edges)}", f"v{a}", f"v{order[i]}"))
        while len(edges) < m:
            u, v = rng.sample(range(n), 2)
            edges.append((f"e{len(edges)}", f"v{u}", f"v{v}"))
        g = build_graph(vertices, edges)
        if not connected or len(edges) <= max_edges:
            return g


def random_colouring(rng: random.Random, g: ColouredGraph) -> ColouredGraph:
    return g.with_colour(tuple(rng.randint(0, 1) for _ in range(g.n)))
