"""Operator and classical strategies for graph incidence games.

The two nonplanar games on six and five vertices admit perfect operator
strategies built from tensor products of a pair of anticommuting signed
permutation matrices.  Verification is numerical with an explicit
tolerance, plus an exact integer closure of the generated matrix group
whose size must match the coset count of the corresponding incidence
group.  Classically solvable games get their deterministic strategies
enumerated from the binary solution space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import SolutionSet, Unsolvable, solve_and_enumerate
from .graphs import (ColouredGraph, magic_pentagram_graph, magic_square_graph,
                     parse_colour_spec)

__all__ = [
    "dih4_generators",
    "game_observables",
    "Strategy",
    "build_strategy",
    "StrategyReport",
    "verify_perfect",
    "integer_closure",
    "deterministic_strategies",
    "verify_deterministic",
]


def dih4_generators():
    """Reflections generating the order-8 dihedral group; their product
    has order 4, so the square of the product is the central -I."""
    z1 = np.array([[1, 0], [0, -1]], dtype=np.int64)
    z2 = np.array([[0, 1], [1, 0]], dtype=np.int64)
    return z1, z2


def _kron(*mats):
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def game_observables(name: str):
    """(coloured graph, edge observables, J) for `k33` or `k5`.

    Both games use the odd colouring with the 1 on the last vertex.  The
    six-vertex game acts on dimension four, the five-vertex game on
    dimension eight; in both cases J is minus the identity.
    """
    a, b = dih4_generators()
    eye = np.eye(2, dtype=np.int64)
    if name == "k33":
        g = parse_colour_spec(magic_square_graph(), "odd")
        obs = {
            "1": _kron(a, eye),
            "2": _kron(eye, a),
            "3": _kron(a, a),
            "4": _kron(eye, b),
            "5": _kron(b, eye),
            "6": _kron(b, b),
            "7": _kron(a, b),
            "8": _kron(b, a),
            "9": _kron(a @ b, a @ b),
        }
        dim = 4
    elif name == "k5":
        g = parse_colour_spec(magic_pentagram_graph(), "odd")
        obs = {
            "1": _kron(a, eye, eye),
            "2": _kron(eye, a, eye),
            "3": _kron(eye, eye, a),
            "4": _kron(b, eye, eye),
            "5": _kron(eye, b, eye),
            "6": _kron(eye, eye, b),
            "7": _kron(b, b, a),
            "8": _kron(a, a, a),
            "9": _kron(a, b, b),
            "10": _kron(b, a, b),
        }
        dim = 8
    else:
        raise ValueError(f"unknown game {name!r}")
    j = -np.eye(dim, dtype=np.int64)
    return g, obs, j


@dataclass(frozen=True)
class Strategy:
    graph: ColouredGraph
    first: dict    # edge name -> observable of the first player
    second: dict   # edge name -> observable of the second player
    state: np.ndarray

    @property
    def dim(self):
        return int(next(iter(self.first.values())).shape[0])


def build_strategy(g: ColouredGraph, obs: dict) -> Strategy:
    """Shared maximally entangled state; second player transposes."""
    d = next(iter(obs.values())).shape[0]
    state = np.eye(d).reshape(-1) / np.sqrt(d)
    second = {nm: m.T.copy() for nm, m in obs.items()}
    return Strategy(graph=g, first=dict(obs), second=second, state=state)


@dataclass(frozen=True)
class StrategyReport:
    ok: bool
    max_deviation: float
    violations: tuple


def verify_perfect(strategy: Strategy, tol: float = 1e-9) -> StrategyReport:
    """All conditions for winning every question with certainty.

    Observables must be symmetric involutions; edges at a vertex must
    commute, multiply to (-1)^colour; the two players' answers must agree
    on every edge under the shared state.
    """
    g = strategy.graph
    violations = []
    worst = 0.0

    def check(kind, where, dev):
        nonlocal worst
        dev = float(dev)
        worst = max(worst, dev)
        if dev > tol:
            violations.append((kind, where, dev))

    d = strategy.dim
    eye = np.eye(d)
    for nm, m in strategy.first.items():
        check("symmetric", nm, np.abs(m - m.T).max())
        check("involution", nm, np.abs(m @ m - eye).max())
    for v in range(g.n):
        inc = g.incident[v]
        prod = eye
        for e in inc:
            prod = prod @ strategy.first[g.edge_names[e]]
        sign = -1.0 if g.colour[v] else 1.0
        check("vertex-product", g.vertex_names[v],
              np.abs(prod - sign * eye).max())
        for i, e in enumerate(inc):
            for f in inc[i + 1:]:
                me = strategy.first[g.edge_names[e]]
                mf = strategy.first[g.edge_names[f]]
                check("commutation",
                      f"{g.edge_names[e]},{g.edge_names[f]}",
                      np.abs(me @ mf - mf @ me).max())
    psi = strategy.state
    for nm in strategy.first:
        op = np.kron(strategy.first[nm], strategy.second[nm])
        corr = psi @ (op @ psi)
        check("agreement", nm, abs(corr - 1.0))
    return StrategyReport(ok=not violations, max_deviation=worst,
                          violations=tuple(violations))


def integer_closure(mats, cap: int = 10_000) -> list:
    """All products of the given exact integer matrices, breadth first."""
    gens = [np.asarray(m, dtype=np.int64) for m in mats]
    d = gens[0].shape[0]
    start = np.eye(d, dtype=np.int64)
    seen = {start.tobytes(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for gmat in gens:
                prod = m @ gmat
                key = prod.tobytes()
                if key not in seen:
                    if len(seen) >= cap:
                        raise RuntimeError("closure exceeded cap")
                    seen[key] = prod
                    nxt.append(prod)
        frontier = nxt
    return list(seen.values())


def deterministic_strategies(g: ColouredGraph, cap: int = 1 << 20) -> SolutionSet:
    """Sign assignments winning classically, from the binary solution
    space of the incidence constraints.  Raises Unsolvable when the game
    has no classical solution."""
    return solve_and_enumerate(g, cap)


def verify_deterministic(g: ColouredGraph, assignment: dict) -> bool:
    """Exact check that a 0/1 edge-id assignment satisfies every vertex."""
    for v in range(g.n):
        total = 0
        for e in g.incident[v]:
            total ^= assignment[e]
        if total != g.colour[v]:
            return False
    return True
