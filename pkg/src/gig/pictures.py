"""Planar pictures certifying relations in graph incidence groups.

A picture over a graph G is a planar graph with a distinguished boundary
vertex, edges labelled by edges of G, and interior vertices labelled by
vertices of G so that the edge labels at an interior vertex biject with
the edge set of its label.  Reading the labels around the boundary vertex
gives a word that equals J to the power (character dot colouring) in the
incidence group, and every relation arises this way, so a validated
picture is a machine-checkable certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import (ColouredGraph, build_graph, graph_from_json,
                     graph_to_json, subgraph)
from .minors import is_planar, validate_embedding

__all__ = [
    "Picture",
    "PictureReport",
    "from_embedding",
    "crossing_picture",
    "CROSSING_PAIRS",
    "picture_to_json",
    "picture_from_json",
]

# edge pairs with no shared endpoint, drawable with a single crossing
CROSSING_PAIRS = {"k33": ("1", "5"), "k5": ("1", "4")}


@dataclass(frozen=True)
class PictureReport:
    ok: bool
    errors: tuple


class Picture:
    """Immutable labelled picture over a reference graph.

    `edges` lists (name, end, end) triples of the picture graph;
    `rotation` gives the counterclockwise edge-name order at every picture
    vertex; `h_v` labels interior vertices by graph vertex names and `h_e`
    labels picture edges by graph edge names.
    """

    def __init__(self, graph: ColouredGraph, vertices, boundary: str,
                 edges, rotation: dict, h_v: dict, h_e: dict):
        self.graph = graph
        self.vertices = tuple(vertices)
        self.boundary = boundary
        self.edges = tuple((str(nm), str(a), str(b)) for nm, a, b in edges)
        self.rotation = {v: tuple(names) for v, names in rotation.items()}
        self.h_v = dict(h_v)
        self.h_e = dict(h_e)
        if boundary not in self.vertices:
            raise ValueError("boundary vertex missing from picture")
        # structural validity (distinct names, no loops) via the graph type
        self._pgraph = build_graph(
            [(v, 0) for v in self.vertices],
            [(nm, a, b) for nm, a, b in self.edges])

    def validate(self) -> PictureReport:
        errors = []
        interior = [v for v in self.vertices if v != self.boundary]
        if sorted(self.h_v) != sorted(interior):
            errors.append("interior labelling domain mismatch")
        if sorted(self.h_e) != sorted(nm for nm, _, _ in self.edges):
            errors.append("edge labelling domain mismatch")
        if errors:
            return PictureReport(ok=False, errors=tuple(errors))
        try:
            for v, gv in self.h_v.items():
                self.graph.vertex_id(gv)
            for e, ge in self.h_e.items():
                self.graph.edge_id(ge)
        except (KeyError, ValueError) as exc:
            return PictureReport(ok=False, errors=(f"unknown label: {exc}",))
        if sorted(self.rotation) != sorted(self.vertices):
            errors.append("rotation domain mismatch")
        elif not validate_embedding(self._pgraph, self.rotation):
            errors.append("rotation system is not a planar embedding")
        for v in self.h_v:
            got = sorted(
                self.graph.edge_id(self.h_e[nm])
                for nm in self._incident_names(v))
            want = sorted(self.graph.incident[
                self.graph.vertex_id(self.h_v[v])])
            if got != want:
                errors.append(
                    f"labels at {v} do not biject with the edge set"
                    f" of {self.h_v[v]}")
        return PictureReport(ok=not errors, errors=tuple(errors))

    def _incident_names(self, v: str):
        return [nm for nm, a, b in self.edges if v in (a, b)]

    def is_closed(self) -> bool:
        return not self._incident_names(self.boundary)

    def boundary_word(self) -> tuple:
        """Graph edge labels counterclockwise around the boundary vertex."""
        return tuple(self.h_e[nm] for nm in self.rotation[self.boundary])

    def canonical_boundary_word(self) -> tuple:
        w = self.boundary_word()
        if not w:
            return w
        return min(w[i:] + w[:i] for i in range(len(w)))

    def character(self) -> tuple:
        """Parity of the fibre over each graph vertex, in vertex id order."""
        chi = [0] * self.graph.n
        for gv in self.h_v.values():
            chi[self.graph.vertex_id(gv)] ^= 1
        return tuple(chi)

    def vankampen_relation(self):
        """The certified relation: (boundary word, exponent of J)."""
        chi = self.character()
        a = sum(c * b for c, b in zip(chi, self.graph.colour)) % 2
        return self.boundary_word(), a


def from_embedding(g: ColouredGraph, vertices=None,
                   boundary_name: str = "b") -> Picture:
    """Closed picture from a planar embedding.

    With `vertices` the picture covers just those (they must span whole
    components, or the label bijection fails validation).  Each covered
    vertex is used exactly once, so the character is one exactly there:
    a planar component with odd colouring certifies J = 1.
    """
    if vertices is None:
        sub = g
    else:
        vids = sorted(g.vertex_id(v) for v in vertices)
        vset = set(vids)
        eids = [e for e, (u, w) in enumerate(g.edges)
                if u in vset and w in vset]
        sub = subgraph(g, vids, eids)
    report = is_planar(sub)
    if not report.planar:
        raise ValueError("graph is not planar")
    if boundary_name in g.vertex_names:
        raise ValueError(f"boundary name {boundary_name!r} collides")
    rotation = {v: tuple(report.embedding[v]) for v in sub.vertex_names}
    rotation[boundary_name] = ()
    return Picture(
        graph=g,
        vertices=sub.vertex_names + (boundary_name,),
        boundary=boundary_name,
        edges=[(sub.edge_names[e], sub.vertex_names[u], sub.vertex_names[w])
               for e, (u, w) in enumerate(sub.edges)],
        rotation=rotation,
        h_v={v: v for v in sub.vertex_names},
        h_e={nm: nm for nm in sub.edge_names},
    )


def crossing_picture(g: ColouredGraph, e_name: str, f_name: str,
                     boundary_name: str = "b") -> Picture:
    """Picture with boundary word e f e f from a one-crossing drawing.

    Removes e and f, joins their four ends to the boundary vertex, and
    embeds the result.  When the graph minus the pair is planar but the
    graph is not, any embedding must alternate the four stubs around the
    boundary, which is checked rather than assumed.  Every graph vertex
    occurs once, so for an odd colouring this certifies [x_e, x_f] = J.
    """
    if boundary_name in g.vertex_names:
        raise ValueError(f"boundary name {boundary_name!r} collides")
    e = g.edge_id(e_name)
    f = g.edge_id(f_name)
    if set(g.edges[e]) & set(g.edges[f]):
        raise ValueError("edges share a vertex")
    stub = {}
    vertices = [(v, 0) for v in g.vertex_names] + [(boundary_name, 0)]
    edges = []
    for idx in range(g.m):
        nm = g.edge_names[idx]
        u, w = g.edges[idx]
        if idx in (e, f):
            for side, gv in (("a", u), ("b", w)):
                half = f"{nm}{side}"
                edges.append((half, g.vertex_names[gv], boundary_name))
                stub[half] = nm
        else:
            edges.append((nm, g.vertex_names[u], g.vertex_names[w]))
    pgraph = build_graph(vertices, edges)
    report = is_planar(pgraph)
    if not report.planar:
        raise ValueError("graph minus the pair does not embed")
    ring = report.embedding[boundary_name]
    if len(ring) != 4:
        raise RuntimeError("boundary vertex degree is not four")
    e_halves = {f"{e_name}a", f"{e_name}b"}
    epos = {i for i, nm in enumerate(ring) if nm in e_halves}
    if epos not in ({0, 2}, {1, 3}):
        raise ValueError("stubs do not alternate: the pair does not cross")
    start = next(i for i, nm in enumerate(ring) if nm in e_halves)
    ring = ring[start:] + ring[:start]
    rotation = {v: tuple(report.embedding[v]) for v in pgraph.vertex_names}
    rotation[boundary_name] = tuple(ring)
    h_e = {nm: stub.get(nm, nm) for nm, _, _ in edges}
    return Picture(
        graph=g,
        vertices=pgraph.vertex_names,
        boundary=boundary_name,
        edges=edges,
        rotation=rotation,
        h_v={v: v for v in g.vertex_names},
        h_e=h_e,
    )


def picture_to_json(pic: Picture) -> str:
    obj = {
        "graph": json.loads(graph_to_json(pic.graph)),
        "vertices": list(pic.vertices),
        "boundary": pic.boundary,
        "edges": [list(t) for t in pic.edges],
        "rotation": {v: list(r) for v, r in sorted(pic.rotation.items())},
        "h_v": dict(sorted(pic.h_v.items())),
        "h_e": dict(sorted(pic.h_e.items())),
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def picture_from_json(text: str) -> Picture:
    obj = json.loads(text)
    return Picture(
        graph=graph_from_json(json.dumps(obj["graph"])),
        vertices=obj["vertices"],
        boundary=obj["boundary"],
        edges=[tuple(t) for t in obj["edges"]],
        rotation=obj["rotation"],
        h_v=obj["h_v"],
        h_e=obj["h_e"],
    )
