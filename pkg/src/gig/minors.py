"""Coloured minor operations, containment search, planarity, structure cases.

The five operations: edge deletion, edge contraction (removes every edge
between the endpoints, colours add), deletion of an isolated colour-0
vertex, edge toggle (flips both endpoint colours), and identification of
colour-isomorphic components.  All preserve total parity.

Containment of a coloured pattern reduces to uncoloured containment plus
parity bookkeeping: for a connected host the pattern embeds iff it embeds
uncoloured and total parities agree; for a disconnected host, pattern
components are assigned to host components, each host component must
contain its assigned part with matching parity, and unassigned host
components must be even.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms import isomorphism

from .graphs import (
    ColouredGraph,
    c2c2_graph,
    component_ids,
    connected_components,
    graph_to_json,
    subgraph,
)

__all__ = [
    "MinorOp",
    "MinorWitness",
    "make_witness",
    "apply_minor_op",
    "graph_hash",
    "graph_iso",
    "reduce_graph",
    "has_minor",
    "HasMinorResult",
    "is_planar",
    "PlanarityReport",
    "validate_embedding",
    "has_two_disjoint_cycles",
    "lovasz_case",
    "LovaszReport",
    "minor_hom",
    "witness_hom",
]


@dataclass(frozen=True)
class MinorOp:
    kind: str  # delete_edge | contract_edge | delete_vertex | toggle_edge | identify_components
    edge: str | None = None
    vertex: str | None = None
    vertex_map: tuple | None = None  # identify: ((dropped_v, kept_v), ...)
    edge_map: tuple | None = None    # identify: ((dropped_e, kept_e), ...)

    def to_obj(self):
        obj = {"op": self.kind}
        if self.edge is not None:
            obj["edge"] = self.edge
        if self.vertex is not None:
            obj["vertex"] = self.vertex
        if self.vertex_map is not None:
            obj["vertex_map"] = [list(p) for p in self.vertex_map]
        if self.edge_map is not None:
            obj["edge_map"] = [list(p) for p in self.edge_map]
        return obj

    @classmethod
    def from_obj(cls, obj) -> "MinorOp":
        return cls(
            obj["op"],
            obj.get("edge"),
            obj.get("vertex"),
            tuple(tuple(p) for p in obj["vertex_map"]) if "vertex_map" in obj else None,
            tuple(tuple(p) for p in obj["edge_map"]) if "edge_map" in obj else None,
        )


def delete_edge(e: str) -> MinorOp:
    return MinorOp("delete_edge", edge=e)


def contract_edge(e: str) -> MinorOp:
    return MinorOp("contract_edge", edge=e)


def delete_vertex(v: str) -> MinorOp:
    return MinorOp("delete_vertex", vertex=v)


def toggle_edge(e: str) -> MinorOp:
    return MinorOp("toggle_edge", edge=e)


def graph_hash(g: ColouredGraph) -> str:
    return hashlib.sha256(graph_to_json(g).encode()).hexdigest()[:16]


def apply_minor_op(g: ColouredGraph, op: MinorOp, coloured: bool = True) -> ColouredGraph:
    """Apply one operation; names of surviving elements are preserved.

    With coloured=False the colour-0 requirement on vertex deletion is
    waived (used when replaying uncoloured witnesses).
    """
    if op.kind == "delete_edge":
        e = g.edge_id(op.edge)
        keep = [i for i in range(g.m) if i != e]
        return ColouredGraph(
            g.vertex_names, g.colour,
            tuple(g.edge_names[i] for i in keep),
            tuple(g.edges[i] for i in keep),
        )
    if op.kind == "toggle_edge":
        e = g.edge_id(op.edge)
        u, v = g.edges[e]
        c = list(g.colour)
        c[u] ^= 1
        c[v] ^= 1
        return g.with_colour(c)
    if op.kind == "delete_vertex":
        v = g.vertex_id(op.vertex)
        if g.degree(v) != 0:
            raise ValueError("vertex %r is not isolated" % op.vertex)
        if coloured and g.colour[v] != 0:
            raise ValueError("vertex %r has colour 1 and cannot be deleted" % op.vertex)
        keep = [i for i in range(g.n) if i != v]
        vmap = {x: i for i, x in enumerate(keep)}
        return ColouredGraph(
            tuple(g.vertex_names[i] for i in keep),
            tuple(g.colour[i] for i in keep),
            g.edge_names,
            tuple((vmap[a], vmap[b]) for a, b in g.edges),
        )
    if op.kind == "contract_edge":
        e = g.edge_id(op.edge)
        u, v = g.edges[e]  # u < v; u survives
        keepv = [i for i in range(g.n) if i != v]
        vmap = {x: i for i, x in enumerate(keepv)}
        colour = [g.colour[i] for i in keepv]
        colour[vmap[u]] = (g.colour[u] + g.colour[v]) % 2
        enames, epairs = [], []
        for i, (a, b) in enumerate(g.edges):
            if {a, b} == {u, v}:
                continue  # the contracted edge and everything parallel to it
            a2 = u if a == v else a
            b2 = u if b == v else b
            enames.append(g.edge_names[i])
            epairs.append((min(vmap[a2], vmap[b2]), max(vmap[a2], vmap[b2])))
        return ColouredGraph(
            tuple(g.vertex_names[i] for i in keepv),
            tuple(colour),
            tuple(enames),
            tuple(epairs),
        )
    if op.kind == "identify_components":
        vmap = dict(op.vertex_map)
        emap = dict(op.edge_map)
        dropped_v = {g.vertex_id(nm) for nm in vmap}
        dropped_e = {g.edge_id(nm) for nm in emap}
        # validate: the map is a colour-isomorphism between two components
        comps = component_ids(g)
        dcomp = None
        for cv, ce in comps:
            if dropped_v == set(cv):
                dcomp = (cv, ce)
        if dcomp is None or dropped_e != set(dcomp[1]):
            raise ValueError("identify_components must drop a whole component")
        for dn, kn in vmap.items():
            if g.colour[g.vertex_id(dn)] != g.colour[g.vertex_id(kn)]:
                raise ValueError("identification is not colour-preserving")
        for dn, kn in emap.items():
            du, dv = g.edges[g.edge_id(dn)]
            ku, kv = g.edges[g.edge_id(kn)]
            imgs = {g.vertex_id(vmap[g.vertex_names[du]]), g.vertex_id(vmap[g.vertex_names[dv]])}
            if imgs != {ku, kv}:
                raise ValueError("identification does not respect incidence")
        keepv = [i for i in range(g.n) if i not in dropped_v]
        keepe = [i for i in range(g.m) if i not in dropped_e]
        nvmap = {x: i for i, x in enumerate(keepv)}
        return ColouredGraph(
            tuple(g.vertex_names[i] for i in keepv),
            tuple(g.colour[i] for i in keepv),
            tuple(g.edge_names[i] for i in keepe),
            tuple((nvmap[g.edges[i][0]], nvmap[g.edges[i][1]]) for i in keepe),
        )
    raise ValueError("unknown op kind %r" % op.kind)


@dataclass(frozen=True)
class MinorWitness:
    """Replayable operation sequence from a host down to a pattern."""

    ops: tuple
    hashes: tuple  # graph hash after each op
    coloured: bool

    def replay(self, host: ColouredGraph, check_hashes: bool = True) -> ColouredGraph:
        g = host
        for i, op in enumerate(self.ops):
            g = apply_minor_op(g, op, coloured=self.coloured)
            if check_hashes and self.hashes and graph_hash(g) != self.hashes[i]:
                raise ValueError("witness hash mismatch at step %d" % i)
        return g

    def validate(self, host: ColouredGraph, pattern: ColouredGraph) -> bool:
        try:
            final = self.replay(host)
        except (ValueError, KeyError):
            return False
        return graph_iso(final, pattern, coloured=self.coloured)

    def to_json(self) -> str:
        return json.dumps(
            {
                "coloured": self.coloured,
                "ops": [op.to_obj() for op in self.ops],
                "hashes": list(self.hashes),
            },
            sort_keys=True,
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "MinorWitness":
        obj = json.loads(text)
        return cls(
            tuple(MinorOp.from_obj(o) for o in obj["ops"]),
            tuple(obj["hashes"]),
            obj["coloured"],
        )


def make_witness(host: ColouredGraph, ops, coloured: bool) -> MinorWitness:
    hashes = []
    g = host
    for op in ops:
        g = apply_minor_op(g, op, coloured=coloured)
        hashes.append(graph_hash(g))
    return MinorWitness(tuple(ops), tuple(hashes), coloured)


# ---------------------------------------------------------------------------
# Isomorphism via networkx.

def _to_nx(g: ColouredGraph, coloured: bool) -> nx.MultiGraph:
    G = nx.MultiGraph()
    for v in range(g.n):
        G.add_node(v, colour=g.colour[v] if coloured else 0)
    for e, (u, v) in enumerate(g.edges):
        G.add_edge(u, v, key=e)
    return G


def _colour_match(a, b):
    return a["colour"] == b["colour"]


def graph_iso(g1: ColouredGraph, g2: ColouredGraph, coloured: bool = False) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    gm = isomorphism.MultiGraphMatcher(
        _to_nx(g1, coloured), _to_nx(g2, coloured), node_match=_colour_match
    )
    return gm.is_isomorphic()


def _iso_mapping(g1: ColouredGraph, g2: ColouredGraph, coloured: bool = False):
    """Vertex map g1 id -> g2 id, or None."""
    gm = isomorphism.MultiGraphMatcher(
        _to_nx(g1, coloured), _to_nx(g2, coloured), node_match=_colour_match
    )
    if not gm.is_isomorphic():
        return None
    return dict(gm.mapping)


# ---------------------------------------------------------------------------
# Reduction: suppress series vertices, trim pendants, drop isolated colour-0.

def reduce_graph(g: ColouredGraph):
    """Fixed point of the cheap group-preserving reductions.

    Uncoloured semantics are preserved exactly (subdivision and forest
    lemmas); coloured semantics preserve componentwise parity.  Cycles stop
    at the double edge; isolated colour-1 vertices are untouchable.
    Returns (reduced graph, op list).
    """
    ops = []
    while True:
        op_batch = _reduce_step(g)
        if not op_batch:
            return g, ops
        for op in op_batch:
            g = apply_minor_op(g, op)
            ops.append(op)


def _reduce_step(g: ColouredGraph):
    for v in range(g.n):
        if g.degree(v) == 0 and g.colour[v] == 0:
            return [delete_vertex(g.vertex_names[v])]
    for v in range(g.n):
        if g.degree(v) == 1:
            e = g.incident[v][0]
            batch = []
            if g.colour[v]:
                batch.append(toggle_edge(g.edge_names[e]))
            batch.append(delete_edge(g.edge_names[e]))
            batch.append(delete_vertex(g.vertex_names[v]))
            return batch
    for v in range(g.n):
        if g.degree(v) == 2:
            e1, e2 = g.incident[v]
            u1 = g.other_end(e1, v)
            u2 = g.other_end(e2, v)
            if u1 == u2:
                continue  # the two edges are parallel: a C2, keep it
            batch = []
            if g.colour[v]:
                batch.append(toggle_edge(g.edge_names[e1]))
            batch.append(contract_edge(g.edge_names[e2]))
            return batch
    return []


# ---------------------------------------------------------------------------
# Minor containment search.

@dataclass
class HasMinorResult:
    status: str  # contained | not_contained | inconclusive
    witness: MinorWitness | None = None
    explored: int = 0

    @property
    def contained(self) -> bool:
        return self.status == "contained"


DEFAULT_SEARCH_BUDGET = 2_000_000


def _shape_key(g: ColouredGraph):
    return (g.n, tuple(sorted(g.edges)))


def _search_uncoloured(host: ColouredGraph, pattern: ColouredGraph, budget: int):
    """DFS over delete/contract sequences, memoised on the labelled shape.

    Sound state reductions keep the space small: surplus isolated vertices
    and (for patterns of min degree >= 2) pendant vertices are trimmed; for
    min degree >= 3 series vertices are suppressed; parallel edges branch
    once per class; a connected pattern must land in a single component.
    Returns (ops | None, explored, exhausted_flag).
    """
    pat_isolated = sum(1 for v in range(pattern.n) if pattern.degree(v) == 0)
    pat_mindeg = min((pattern.degree(v) for v in range(pattern.n)), default=0)
    pat_connected = len(component_ids(pattern)) == 1
    # series suppression is sound for patterns of min degree >= 3, and for
    # the two-disjoint-2-cycles pattern: contracting one edge at a degree-2
    # vertex preserves existence of two vertex-disjoint cycles both ways
    can_suppress = pat_mindeg >= 3 or graph_iso(pattern, c2c2_graph(), coloured=False)
    pkey = _shape_key(pattern)

    if pattern.m == 0:
        # edgeless pattern: any host with enough vertices contains it
        if host.n < pattern.n:
            return None, 0, False
        ops = [delete_edge(nm) for nm in host.edge_names]
        g = host
        for op in ops:
            g = apply_minor_op(g, op, coloured=False)
        for v in range(host.n - pattern.n):
            ops.append(delete_vertex(host.vertex_names[v]))
        return ops, 1, False

    failed: set = set()
    explored = 0
    gave_up = False

    def trim(g: ColouredGraph):
        """Sound reductions for this pattern; returns (graph, ops)."""
        ops = []
        while True:
            iso = [v for v in range(g.n) if g.degree(v) == 0]
            if len(iso) > pat_isolated:
                op = delete_vertex(g.vertex_names[iso[0]])
                g = apply_minor_op(g, op, coloured=False)
                ops.append(op)
                continue
            if pat_mindeg >= 2:
                pend = next((v for v in range(g.n) if g.degree(v) == 1), None)
                if pend is not None:
                    op = delete_edge(g.edge_names[g.incident[pend][0]])
                    g = apply_minor_op(g, op, coloured=False)
                    ops.append(op)
                    continue
            if can_suppress:
                done = False
                for v in range(g.n):
                    if g.degree(v) == 2:
                        e1, e2 = g.incident[v]
                        if g.other_end(e1, v) != g.other_end(e2, v):
                            op = contract_edge(g.edge_names[e2])
                            g = apply_minor_op(g, op, coloured=False)
                            ops.append(op)
                            done = True
                            break
                if done:
                    continue
            return g, ops

    def dfs(g: ColouredGraph):
        nonlocal explored, gave_up
        g, pre_ops = trim(g)
        if g.m < pattern.m or g.n < pattern.n:
            return None
        key = _shape_key(g)
        if key in failed:
            return None
        explored += 1
        if explored > budget:
            gave_up = True
            return None
        if g.m == pattern.m:
            # no operation preserves the edge count, so this is decisive
            if g.n == pattern.n and (key == pkey or graph_iso(g, pattern, coloured=False)):
                return pre_ops
            failed.add(key)
            return None
        if pat_connected:
            comps = component_ids(g)
            if len(comps) > 1:
                for cv, ce in comps:
                    if len(ce) < pattern.m or len(cv) < pattern.n:
                        continue
                    cvset = set(cv)
                    drops = [
                        delete_edge(g.edge_names[e])
                        for e in range(g.m)
                        if g.edges[e][0] not in cvset
                    ]
                    drops += [
                        delete_vertex(g.vertex_names[v])
                        for v in range(g.n)
                        if v not in cvset
                    ]
                    h = g
                    for op in drops:
                        h = apply_minor_op(h, op, coloured=False)
                    sub = dfs(h)
                    if sub is not None:
                        return pre_ops + drops + sub
                    if gave_up:
                        return None
                failed.add(key)
                return None
        # one branch per parallel class: delete the highest member,
        # contract the lowest (parallel edges are interchangeable)
        classes: dict[tuple, list[int]] = {}
        for e, pair in enumerate(g.edges):
            classes.setdefault(pair, []).append(e)
        pairs = sorted(classes)
        for pair in pairs:
            op = delete_edge(g.edge_names[classes[pair][-1]])
            sub = dfs(apply_minor_op(g, op, coloured=False))
            if sub is not None:
                return pre_ops + [op] + sub
            if gave_up:
                return None
        for pair in pairs:
            op = contract_edge(g.edge_names[classes[pair][0]])
            sub = dfs(apply_minor_op(g, op, coloured=False))
            if sub is not None:
                return pre_ops + [op] + sub
            if gave_up:
                return None
        failed.add(key)
        return None

    ops = dfs(host)
    return ops, explored, gave_up


def has_minor(
    host: ColouredGraph,
    pattern: ColouredGraph,
    coloured: bool = False,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> HasMinorResult:
    """Decide pattern containment; on success the witness replays on host."""
    if pattern.n == 0:
        raise ValueError("pattern must be non-empty")
    if not coloured:
        ops, explored, gave_up = _search_uncoloured(host, pattern, budget)
        if ops is not None:
            return HasMinorResult("contained", make_witness(host, ops, False), explored)
        return HasMinorResult("inconclusive" if gave_up else "not_contained", None, explored)
    return _has_minor_coloured(host, pattern, budget)


def _has_minor_coloured(host, pattern, budget) -> HasMinorResult:
    host_comps = component_ids(host)
    pat_comps = component_ids(pattern)
    explored_total = 0
    if len(host_comps) == 1:
        if host.parity() != pattern.parity():
            return HasMinorResult("not_contained")
        ops, explored, gave_up = _search_uncoloured(host, pattern, budget)
        if ops is None:
            return HasMinorResult("inconclusive" if gave_up else "not_contained", None, explored)
        cops = _colour_witness_ops(host, ops, pattern)
        return HasMinorResult("contained", make_witness(host, cops, True), explored)

    # assign pattern components to host components
    k = len(host_comps)
    hsub = [subgraph(host, cv, ce) for cv, ce in host_comps]
    psub = [subgraph(pattern, cv, ce) for cv, ce in pat_comps]
    gave_up_any = False
    for assign in itertools.product(range(k), repeat=len(pat_comps)):
        per_host: dict[int, list[int]] = {}
        for pi, hi in enumerate(assign):
            per_host.setdefault(hi, []).append(pi)
        ok = True
        for hi in range(k):
            part_parity = sum(psub[pi].parity() for pi in per_host.get(hi, [])) % 2
            if hsub[hi].parity() != part_parity:
                ok = False
                break
        if not ok:
            continue
        all_ops: list[MinorOp] = []
        for hi in range(k):
            pis = per_host.get(hi, [])
            if not pis:
                all_ops.extend(_deletion_ops(hsub[hi]))
                continue
            part = _disjoint_union([psub[pi] for pi in pis])
            ops, explored, gave_up = _search_uncoloured(hsub[hi], part, budget)
            explored_total += explored
            gave_up_any = gave_up_any or gave_up
            if ops is None:
                ok = False
                break
            all_ops.extend(_colour_witness_ops(hsub[hi], ops, part))
        if ok:
            return HasMinorResult(
                "contained", make_witness(host, all_ops, True), explored_total
            )
    return HasMinorResult(
        "inconclusive" if gave_up_any else "not_contained", None, explored_total
    )


def _disjoint_union(graphs):
    names_v, colours, names_e, pairs = [], [], [], []
    for idx, g in enumerate(graphs):
        off = len(names_v)
        for v in range(g.n):
            names_v.append("%s~%d" % (g.vertex_names[v], idx))
            colours.append(g.colour[v])
        for e in range(g.m):
            names_e.append("%s~%d" % (g.edge_names[e], idx))
            u, v = g.edges[e]
            pairs.append((u + off, v + off))
    return ColouredGraph(tuple(names_v), tuple(colours), tuple(names_e), tuple(pairs))


def _deletion_ops(comp: ColouredGraph):
    """Remove an even component entirely: toggle it to all-zero, then delete."""
    ops = [toggle_edge(comp.edge_names[e]) for e in _toggle_set_to_zero(comp)]
    g = comp
    for op in ops:
        g = apply_minor_op(g, op)
    ops2 = [delete_edge(nm) for nm in comp.edge_names]
    ops3 = [delete_vertex(nm) for nm in comp.vertex_names]
    return ops + ops2 + ops3


def _toggle_set_to_zero(comp: ColouredGraph):
    target = (0,) * comp.n
    return _toggle_set(comp, comp.colour, target)


def _toggle_set(comp: ColouredGraph, src, dst):
    """Edge set whose toggles turn colouring src into dst (equal parity)."""
    mism = [v for v in range(comp.n) if src[v] != dst[v]]
    assert len(mism) % 2 == 0, "toggle targets must have equal parity"
    acc: set = set()
    for i in range(0, len(mism), 2):
        path = _bfs_path(comp, mism[i], mism[i + 1])
        acc ^= set(path)
    return sorted(acc)


def _bfs_path(g: ColouredGraph, s: int, t: int):
    """Edge ids of a shortest s-t path; deterministic by edge id order."""
    if s == t:
        return []
    prev = {s: None}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for e in g.incident[v]:
                w = g.other_end(e, v)
                if w not in prev:
                    prev[w] = (v, e)
                    if w == t:
                        path = []
                        x = t
                        while prev[x] is not None:
                            v0, e0 = prev[x]
                            path.append(e0)
                            x = v0
                        return path[::-1]
                    nxt.append(w)
        frontier = nxt
    raise ValueError("vertices are not connected")


def _colour_witness_ops(host: ColouredGraph, ops, pattern: ColouredGraph):
    """Turn an uncoloured witness into a coloured one (parities already equal).

    Replays the ops to recover branch sets (classes merged by contractions),
    kept edges and the contraction forest, then emits: toggles that move the
    designated colour of every branch set into place, deletions of all other
    edges, deletions of the now-isolated colour-0 vertices, and finally the
    forest contractions.
    """
    g = host
    contracted: list[int] = []  # host edge ids contracted at some point
    for op in ops:
        if op.kind == "contract_edge":
            contracted.append(host.edge_id(op.edge))
        g = apply_minor_op(g, op, coloured=False)
    final = g
    kept = [host.edge_id(nm) for nm in final.edge_names]

    # union-find of host vertices under the contraction forest
    parent = list(range(host.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in contracted:
        u, v = host.edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    mapping = _iso_mapping(final, pattern, coloured=False)
    if mapping is None:
        raise ValueError("uncoloured witness does not reach the pattern")
    # classes whose merged vertex survives into the final graph; everything
    # else (deleted vertices, and classes merged then deleted) is scrapped
    surviving = {find(host.vertex_id(nm)) for nm in final.vertex_names}
    target = [0] * host.n
    for fv in range(final.n):
        root = find(host.vertex_id(final.vertex_names[fv]))
        pv = mapping[fv]
        if pattern.colour[pv]:
            # designated carrier: the smallest host vertex in the class
            target[min(v for v in range(host.n) if find(v) == root)] = 1

    contr_keep = [e for e in contracted if find(host.edges[e][0]) in surviving]
    toggles = [toggle_edge(host.edge_names[e]) for e in _toggle_set(host, host.colour, tuple(target))]
    keep_set = set(kept) | set(contr_keep)
    dels = [delete_edge(host.edge_names[e]) for e in range(host.m) if e not in keep_set]
    vdels = [
        delete_vertex(host.vertex_names[v])
        for v in range(host.n)
        if find(v) not in surviving
    ]
    contr = [contract_edge(host.edge_names[e]) for e in sorted(contr_keep)]
    return toggles + dels + vdels + contr


# ---------------------------------------------------------------------------
# Planarity with certificates.

@dataclass
class PlanarityReport:
    planar: bool
    embedding: dict | None = None       # vertex name -> ccw edge-name list
    witness: MinorWitness | None = None
    pattern_name: str | None = None     # "k5" | "k33"


def _simple_support(g: ColouredGraph):
    """Lowest-id representative per endpoint pair, plus the parallel groups."""
    groups: dict[tuple, list[int]] = {}
    for e, pair in enumerate(g.edges):
        groups.setdefault(pair, []).append(e)
    reps = {pair: es[0] for pair, es in groups.items()}
    return reps, groups


def is_planar(g: ColouredGraph) -> PlanarityReport:
    """Planarity with a rotation-system certificate or a K5/K33 witness.

    Parallel edges are suppressed for the decision and reinstated adjacent
    to their representatives in the embedding.
    """
    reps, groups = _simple_support(g)
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(reps.keys())
    planar, emb = nx.check_planarity(G, counterexample=False)
    if planar:
        data = emb.get_data()
        rotation = {}
        for v in range(g.n):
            order = []
            for w in reversed(data.get(v, [])):  # clockwise -> ccw
                pair = (min(v, w), max(v, w))
                par = groups[pair]
                # mirrored insertion: ascending at the lower endpoint, so
                # each parallel class bounds its own stack of bigon faces
                order.extend(par if v < w else list(reversed(par)))
            rotation[g.vertex_names[v]] = [g.edge_names[e] for e in order]
        return PlanarityReport(True, embedding=rotation)

    # greedy edge deletion to a minimal nonplanar subgraph
    cur = g
    ops: list[MinorOp] = []
    changed = True
    while changed:
        changed = False
        for e in range(cur.m):
            op = delete_edge(cur.edge_names[e])
            cand = apply_minor_op(cur, op, coloured=False)
            if not _nx_planar(cand):
                cur = cand
                ops.append(op)
                changed = True
                break
    from .graphs import complete_graph, complete_bipartite

    for pat, name in ((complete_graph(5), "k5"), (complete_bipartite(3, 3), "k33")):
        res = has_minor(cur, pat, coloured=False)
        if res.contained:
            all_ops = ops + list(res.witness.ops)
            return PlanarityReport(
                False, witness=make_witness(g, all_ops, False), pattern_name=name
            )
    raise RuntimeError("nonplanar graph with neither K5 nor K33 minor")


def _nx_planar(g: ColouredGraph) -> bool:
    reps, _ = _simple_support(g)
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(reps.keys())
    return nx.check_planarity(G, counterexample=False)[0]


def validate_embedding(g: ColouredGraph, rotation: dict) -> bool:
    """Genus check: every component satisfies V - E + F = 2 under face tracing."""
    rot_ids = {}
    for vname, enames in rotation.items():
        v = g.vertex_id(vname)
        rot_ids[v] = [g.edge_id(nm) for nm in enames]
    for v in range(g.n):
        if sorted(rot_ids.get(v, [])) != sorted(g.incident[v]):
            return False
    pos = {}
    for v, order in rot_ids.items():
        for i, e in enumerate(order):
            pos[(v, e)] = i
    # darts: (edge, endpoint we are leaving)
    visited = set()
    faces_by_root: dict[int, int] = {}
    roots = {}
    for cv, _ in component_ids(g):
        for v in cv:
            roots[v] = cv[0]
    for v in range(g.n):
        for e in g.incident[v]:
            if (e, v) in visited:
                continue
            # trace one face
            de, dv = e, v
            while (de, dv) not in visited:
                visited.add((de, dv))
                w = g.other_end(de, dv)
                order = rot_ids[w]
                i = pos[(w, de)]
                de = order[(i + 1) % len(order)]
                dv = w
            faces_by_root[roots[v]] = faces_by_root.get(roots[v], 0) + 1
    for cv, ce in component_ids(g):
        root = min(cv)
        F = faces_by_root.get(root, 1)  # edgeless component: one face
        if len(cv) - len(ce) + F != 2:
            return False
    return True


# ---------------------------------------------------------------------------
# Two vertex-disjoint cycles.

def _enumerate_cycles(g: ColouredGraph):
    """Parallel pairs first, then each simple cycle of length >= 3 once.

    Canonical traversal: the root is the smallest cycle vertex and the
    second vertex is smaller than the last, so each cycle appears in one
    direction only.  Deterministic order.
    """
    out = []
    groups: dict[tuple, list[int]] = {}
    for e, pair in enumerate(g.edges):
        groups.setdefault(pair, []).append(e)
    for pair in sorted(groups):
        es = groups[pair]
        if len(es) >= 2:
            out.append((set(pair), [es[0], es[1]]))
    simple_adj: dict[int, list] = {v: [] for v in range(g.n)}
    for pair in sorted(groups):
        u, v = pair
        e = groups[pair][0]
        simple_adj[u].append((v, e))
        simple_adj[v].append((u, e))

    def extend(root, path_v, path_e, used):
        last = path_v[-1]
        for (w, e) in simple_adj[last]:
            if w == root and len(path_v) >= 3 and path_v[1] < last:
                out.append((set(path_v), path_e + [e]))
            elif w > root and w not in used:
                used.add(w)
                extend(root, path_v + [w], path_e + [e], used)
                used.discard(w)

    for root in range(g.n):
        extend(root, [root], [], {root})
    return out


def _has_any_cycle(g: ColouredGraph, banned_vertices: set):
    """A cycle in g avoiding banned vertices, as (vertexset, edges) or None."""
    groups: dict[tuple, list[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        if u in banned_vertices or v in banned_vertices:
            continue
        groups.setdefault((u, v), []).append(e)
    for pair in sorted(groups):
        es = groups[pair]
        if len(es) >= 2:
            return set(pair), [es[0], es[1]]
    # DFS for a back edge on the simple support
    adj: dict[int, list] = {}
    for (u, v), es in groups.items():
        adj.setdefault(u, []).append((v, es[0]))
        adj.setdefault(v, []).append((u, es[0]))
    seen: dict[int, tuple] = {}
    for s in sorted(adj):
        if s in seen:
            continue
        seen[s] = (None, None)
        stack = [(s, None)]
        while stack:
            v, via = stack.pop()
            for (w, e) in adj.get(v, []):
                if e == via:
                    continue
                if w in seen:
                    # build cycle from tree paths to the common ancestor
                    pv, pw = _tree_path(seen, v), _tree_path(seen, w)
                    common = None
                    sw = set(pw)
                    for x in pv:
                        if x in sw:
                            common = x
                            break
                    cyc_v = []
                    cyc_e = [e]
                    for x in pv:
                        cyc_v.append(x)
                        if x == common:
                            break
                        cyc_e.append(seen[x][1])
                    for x in pw:
                        if x == common:
                            break
                        cyc_v.append(x)
                        cyc_e.append(seen[x][1])
                    return set(cyc_v), cyc_e
                seen[w] = (v, e)
                stack.append((w, e))
    return None


def _tree_path(seen, v):
    path = [v]
    while seen[path[-1]][0] is not None:
        path.append(seen[path[-1]][0])
    return path


def has_two_disjoint_cycles(g: ColouredGraph):
    """(bool, witness) where witness is a pair of vertex-disjoint edge lists."""
    for (vs, es) in _enumerate_cycles(g):
        rest = _has_any_cycle(g, vs)
        if rest is not None:
            return True, (sorted(es), sorted(rest[1]))
    return False, None


# ---------------------------------------------------------------------------
# Structure of graphs without two disjoint cycles.

@dataclass
class LovaszReport:
    apexes: list          # vertex names v with G - v acyclic
    wheel_hubs: list      # vertex names h with G - h a spanning cycle, all spokes present
    is_k5: bool
    k3n_partitions: list  # 3-subsets A (vertex names): complete simple to the rest

    @property
    def any_case(self) -> bool:
        return bool(self.apexes or self.wheel_hubs or self.is_k5 or self.k3n_partitions)


def lovasz_case(g: ColouredGraph) -> LovaszReport:
    """Which of the four structure cases hold (run this on a reduced graph)."""
    two, _ = has_two_disjoint_cycles(g)
    if two:
        raise ValueError("structure cases require a graph without two disjoint cycles")
    apexes = []
    for v in range(g.n):
        rest = _delete_vertex_keep_edges(g, v)
        if rest.is_acyclic():
            apexes.append(g.vertex_names[v])
    hubs = []
    if g.n >= 4:
        for h in range(g.n):
            rim = _delete_vertex_keep_edges(g, h)
            if not _is_single_spanning_cycle(rim) or rim.n < 3:
                continue
            spoked = {g.other_end(e, h) for e in g.incident[h]}
            if spoked == {v for v in range(g.n) if v != h}:
                hubs.append(g.vertex_names[h])
    from .graphs import complete_graph

    k5 = g.n == 5 and g.m == 10 and graph_iso(g, complete_graph(5))
    k3n = []
    if g.n >= 3:
        for A in itertools.combinations(range(g.n), 3):
            Aset = set(A)
            ok = True
            for e, (u, v) in enumerate(g.edges):
                if u in Aset and v in Aset:
                    continue
                if u not in Aset and v not in Aset:
                    ok = False
                    break
            if not ok:
                continue
            for w in range(g.n):
                if w in Aset:
                    continue
                nbrs = sorted(g.other_end(e, w) for e in g.incident[w])
                if nbrs != sorted(A):
                    ok = False
                    break
            if ok:
                k3n.append(tuple(g.vertex_names[a] for a in A))
    return LovaszReport(apexes, hubs, k5, k3n)


def _delete_vertex_keep_edges(g: ColouredGraph, v: int) -> ColouredGraph:
    keepv = [i for i in range(g.n) if i != v]
    keepe = [e for e in range(g.m) if v not in g.edges[e]]
    return subgraph(g, keepv, keepe)


def _is_single_spanning_cycle(g: ColouredGraph) -> bool:
    if g.n < 2 or g.m != g.n:
        return False
    if any(g.degree(v) != 2 for v in range(g.n)):
        return False
    return len(component_ids(g)) == 1


# ---------------------------------------------------------------------------
# Induced homomorphisms of the solution groups.

def minor_hom(g: ColouredGraph, op: MinorOp):
    """WordMap gamma(g) -> gamma(apply_minor_op(g, op)).

    Contraction requires the contracted edge to be the unique edge between
    its endpoints (compose with deletions first otherwise).
    """
    from .presentations import WordMap, gamma

    src = gamma(g)
    tgt_graph = apply_minor_op(g, op)
    tgt = gamma(tgt_graph)
    jsrc, jtgt = src.j, tgt.j

    def tname(nm):
        return tgt.gen_id(nm)

    images: list[tuple] = []
    if op.kind == "delete_edge":
        for e in range(g.m):
            nm = g.edge_names[e]
            images.append(() if nm == op.edge else (tname(nm),))
    elif op.kind == "toggle_edge":
        for e in range(g.m):
            nm = g.edge_names[e]
            images.append((jtgt, tname(nm)) if nm == op.edge else (tname(nm),))
    elif op.kind == "delete_vertex":
        for e in range(g.m):
            images.append((tname(g.edge_names[e]),))
    elif op.kind == "contract_edge":
        e = g.edge_id(op.edge)
        u, v = g.edges[e]
        if sum(1 for (a, b) in g.edges if {a, b} == {u, v}) != 1:
            raise ValueError("contracted edge must be the unique edge between its endpoints")
        rest = [f for f in g.incident[u] if f != e]
        word = ((jtgt,) if g.colour[u] else ()) + tuple(tname(g.edge_names[f]) for f in rest)
        for f in range(g.m):
            images.append(word if f == e else (tname(g.edge_names[f]),))
    elif op.kind == "identify_components":
        emap = dict(op.edge_map)
        for e in range(g.m):
            nm = g.edge_names[e]
            images.append((tname(emap.get(nm, nm)),))
    else:
        raise ValueError("unknown op kind %r" % op.kind)
    images.append((jtgt,))
    return WordMap(src, tgt, tuple(images), provenance="minor op %s" % op.kind)


def witness_hom(host: ColouredGraph, ops):
    """Composite homomorphism gamma(host) -> gamma(ops applied to host).

    A contraction whose edge has parallel copies is preceded by explicit
    deletions of the copies; the resulting graph is unchanged (parallels
    become loops and are dropped either way) and every step stays a
    unique-edge contraction, so each factor map is defined.  J maps to J
    throughout.
    """
    from .presentations import WordMap, gamma

    p0 = gamma(host)
    wm = WordMap(p0, p0, tuple((i,) for i in range(p0.ngens)),
                 provenance="identity")
    cur = host
    for op in ops:
        steps = [op]
        if op.kind == "contract_edge":
            e = cur.edge_id(op.edge)
            uv = set(cur.edges[e])
            steps = [delete_edge(cur.edge_names[f])
                     for f in range(cur.m)
                     if f != e and set(cur.edges[f]) == uv] + [op]
        for step in steps:
            wm = wm.compose(minor_hom(cur, step))
            cur = apply_minor_op(cur, step)
    return wm
