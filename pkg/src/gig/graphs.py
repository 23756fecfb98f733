"""Z2-coloured loopless multigraphs.

Vertices and edges carry dense integer ids (declaration order) plus a name
table.  Graphs are immutable; every transformation builds a new graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "ColouredGraph",
    "GraphFormatError",
    "parse_graph",
    "graph_to_text",
    "graph_to_json",
    "graph_from_json",
    "build_graph",
    "complete_graph",
    "complete_bipartite",
    "wheel_graph",
    "cycle_graph",
    "c2c2_graph",
    "petersen_graph",
    "magic_square_graph",
    "magic_pentagram_graph",
    "builtin_graph",
    "parse_colour_spec",
    "connected_components",
]


class GraphFormatError(ValueError):
    """Malformed graph input; remembers the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class ColouredGraph:
    vertex_names: tuple[str, ...]
    colour: tuple[int, ...]
    edge_names: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]  # endpoint ids, stored (min, max)

    @property
    def n(self) -> int:
        return len(self.vertex_names)

    @property
    def m(self) -> int:
        return len(self.edge_names)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def parity(self, vertices=None) -> int:
        """Sum of colours over `vertices` (default all) mod 2."""
        if vertices is None:
            return sum(self.colour) % 2
        return sum(self.colour[v] for v in vertices) % 2

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if v == u else u

    def with_colour(self, colour) -> "ColouredGraph":
        colour = tuple(int(c) for c in colour)
        if len(colour) != self.n or any(c not in (0, 1) for c in colour):
            raise ValueError("colour vector must assign 0/1 to every vertex")
        return ColouredGraph(self.vertex_names, colour, self.edge_names, self.edges)

    def vertex_id(self, name: str) -> int:
        try:
            return self._vindex[name]
        except KeyError:
            raise KeyError("unknown vertex %r" % name) from None

    def edge_id(self, name: str) -> int:
        try:
            return self._eindex[name]
        except KeyError:
            raise KeyError("unknown edge %r" % name) from None

    @cached_property
    def _vindex(self) -> dict:
        return {nm: i for i, nm in enumerate(self.vertex_names)}

    @cached_property
    def _eindex(self) -> dict:
        return {nm: i for i, nm in enumerate(self.edge_names)}

    def is_acyclic(self) -> bool:
        """True iff no component contains a cycle (parallel edges count)."""
        return all(len(ce) == len(cv) - 1 for cv, ce in component_ids(self))


def build_graph(vertices, edges) -> ColouredGraph:
    """Construct from (name, colour) and (name, u_name, v_name) sequences."""
    names = []
    colours = []
    seen = set()
    for nm, c in vertices:
        if nm in seen:
            raise GraphFormatError("duplicate vertex %r" % nm)
        seen.add(nm)
        if c not in (0, 1):
            raise GraphFormatError("colour of %r must be 0 or 1" % nm)
        names.append(nm)
        colours.append(c)
    vindex = {nm: i for i, nm in enumerate(names)}
    enames = []
    epairs = []
    eseen = set()
    for nm, un, vn in edges:
        if nm in eseen:
            raise GraphFormatError("duplicate edge %r" % nm)
        eseen.add(nm)
        if un not in vindex:
            raise GraphFormatError("edge %r: unknown endpoint %r" % (nm, un))
        if vn not in vindex:
            raise GraphFormatError("edge %r: unknown endpoint %r" % (nm, vn))
        u, v = vindex[un], vindex[vn]
        if u == v:
            raise GraphFormatError("edge %r is a loop" % nm)
        enames.append(nm)
        epairs.append((min(u, v), max(u, v)))
    return ColouredGraph(tuple(names), tuple(colours), tuple(enames), tuple(epairs))


def parse_graph(text: str) -> ColouredGraph:
    """Parse the line format.

    `vertex <name> <0|1>` declares a vertex, `edge <name> <u> <v>` an edge
    between previously declared vertices.  `#` starts a comment.
    """
    vertices: list[tuple[str, int]] = []
    edges: list[tuple[str, str, str]] = []
    vnames = set()
    enames = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "vertex":
            if len(parts) != 3:
                raise GraphFormatError("expected `vertex <name> <0|1>`", lineno)
            nm = parts[1]
            if nm in vnames:
                raise GraphFormatError("duplicate vertex %r" % nm, lineno)
            if parts[2] not in ("0", "1"):
                raise GraphFormatError("colour must be 0 or 1", lineno)
            vnames.add(nm)
            vertices.append((nm, int(parts[2])))
        elif kind == "edge":
            if len(parts) != 4:
                raise GraphFormatError("expected `edge <name> <u> <v>`", lineno)
            nm, un, vn = parts[1], parts[2], parts[3]
            if nm in enames:
                raise GraphFormatError("duplicate edge %r" % nm, lineno)
            if un not in vnames:
                raise GraphFormatError("unknown endpoint %r" % un, lineno)
            if vn not in vnames:
                raise GraphFormatError("unknown endpoint %r" % vn, lineno)
            if un == vn:
                raise GraphFormatError("edge %r is a loop" % nm, lineno)
            enames.add(nm)
            edges.append((nm, un, vn))
        else:
            raise GraphFormatError("unknown directive %r" % kind, lineno)
    return build_graph(vertices, edges)


def graph_to_text(g: ColouredGraph) -> str:
    lines = []
    for i, nm in enumerate(g.vertex_names):
        lines.append("vertex %s %d" % (nm, g.colour[i]))
    for e, nm in enumerate(g.edge_names):
        u, v = g.edges[e]
        lines.append("edge %s %s %s" % (nm, g.vertex_names[u], g.vertex_names[v]))
    return "\n".join(lines) + "\n"


def graph_to_json(g: ColouredGraph) -> str:
    obj = {
        "vertices": [
            {"name": nm, "colour": g.colour[i]} for i, nm in enumerate(g.vertex_names)
        ],
        "edges": [
            {"name": nm, "u": g.vertex_names[g.edges[e][0]], "v": g.vertex_names[g.edges[e][1]]}
            for e, nm in enumerate(g.edge_names)
        ],
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def graph_from_json(text: str) -> ColouredGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError("invalid JSON: %s" % exc) from None
    try:
        vs = [(v["name"], int(v["colour"])) for v in obj["vertices"]]
        es = [(e["name"], e["u"], e["v"]) for e in obj["edges"]]
    except (KeyError, TypeError) as exc:
        raise GraphFormatError("missing field: %s" % exc) from None
    return build_graph(vs, es)


# ---------------------------------------------------------------------------
# Builtin families.  Edge names are consecutive integers starting at "1";
# the id of edge named "k" is k-1 throughout.

def complete_graph(n: int) -> ColouredGraph:
    """K_n, vertices v1..vn, edges in lexicographic pair order."""
    if n < 1:
        raise ValueError("n >= 1")
    vs = [("v%d" % (i + 1), 0) for i in range(n)]
    es = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            k += 1
            es.append((str(k), "v%d" % (i + 1), "v%d" % (j + 1)))
    return build_graph(vs, es)


def complete_bipartite(m: int, n: int) -> ColouredGraph:
    """K_{m,n}.  Edge (j-1)m+i joins first-partition a_i to second-partition b_j."""
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1")
    vs = [("a%d" % (i + 1), 0) for i in range(m)]
    vs += [("b%d" % (j + 1), 0) for j in range(n)]
    es = []
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            es.append((str((j - 1) * m + i), "a%d" % i, "b%d" % j))
    return build_graph(vs, es)


def wheel_graph(n: int) -> ColouredGraph:
    """W_n: rim cycle r1..rn plus hub h.  Rim edges first, then spokes."""
    if n < 3:
        raise ValueError("n >= 3")
    vs = [("r%d" % (i + 1), 0) for i in range(n)] + [("h", 0)]
    es = []
    for i in range(1, n + 1):
        es.append((str(i), "r%d" % i, "r%d" % (i % n + 1)))
    for i in range(1, n + 1):
        es.append((str(n + i), "h", "r%d" % i))
    return build_graph(vs, es)


def cycle_graph(n: int) -> ColouredGraph:
    """C_n; C_2 is the double edge."""
    if n < 2:
        raise ValueError("n >= 2 (loops are not allowed)")
    vs = [("v%d" % (i + 1), 0) for i in range(n)]
    es = [(str(i), "v%d" % i, "v%d" % (i % n + 1)) for i in range(1, n + 1)]
    return build_graph(vs, es)


def c2c2_graph() -> ColouredGraph:
    """Disjoint union of two double edges."""
    vs = [("a1", 0), ("a2", 0), ("b1", 0), ("b2", 0)]
    es = [("1", "a1", "a2"), ("2", "a1", "a2"), ("3", "b1", "b2"), ("4", "b1", "b2")]
    return build_graph(vs, es)


def petersen_graph() -> ColouredGraph:
    vs = [("o%d" % (i + 1), 0) for i in range(5)] + [("i%d" % (i + 1), 0) for i in range(5)]
    es = []
    k = 0
    for i in range(1, 6):
        k += 1
        es.append((str(k), "o%d" % i, "o%d" % (i % 5 + 1)))
    for i in range(1, 6):
        k += 1
        es.append((str(k), "o%d" % i, "i%d" % i))
    for i in range(1, 6):
        k += 1
        es.append((str(k), "i%d" % i, "i%d" % ((i + 1) % 5 + 1)))
    return build_graph(vs, es)


def magic_square_graph() -> ColouredGraph:
    """K_{3,3} with the square-game labelling.

    First partition x,y,z; second partition u,v,w with w last, so the `odd`
    colour spec puts the 1 on w.  Edge k joins the k-th matrix cell's column
    vertex to its row vertex: rows are E(u)={1,2,3}, E(v)={4,5,6},
    E(w)={7,8,9}; columns E(x)={1,4,7}, E(y)={2,5,8}, E(z)={3,6,9}.
    """
    vs = [("x", 0), ("y", 0), ("z", 0), ("u", 0), ("v", 0), ("w", 0)]
    cols = ["x", "y", "z"]
    rows = ["u", "v", "w"]
    es = []
    for j in range(3):
        for i in range(3):
            es.append((str(3 * j + i + 1), cols[i], rows[j]))
    return build_graph(vs, es)


def magic_pentagram_graph() -> ColouredGraph:
    """K_5 with the pentagram-game labelling; apex w last.

    Spokes E(w)={7,8,9,10}; the K_4 part is labelled so that in the solution
    group x8=x1x2x3, x7=x3x4x5, x9=x1x5x6, x10=x2x4x6.
    """
    vs = [("u", 0), ("v", 0), ("x", 0), ("y", 0), ("w", 0)]
    pairs = [
        ("u", "x"), ("u", "y"), ("u", "v"), ("v", "y"), ("v", "x"),
        ("x", "y"), ("v", "w"), ("u", "w"), ("x", "w"), ("y", "w"),
    ]
    es = [(str(k + 1), a, b) for k, (a, b) in enumerate(pairs)]
    return build_graph(vs, es)


_BUILTIN_FIXED = {
    "c2c2": c2c2_graph,
    "petersen": petersen_graph,
    "magic-square": magic_square_graph,
    "magic-pentagram": magic_pentagram_graph,
}


def builtin_graph(spec: str) -> ColouredGraph:
    """Resolve `k(5)`, `k(3,3)`, `wheel(6)`, `cycle(4)`, `c2c2`, `petersen`,
    `magic-square`, `magic-pentagram`."""
    spec = spec.strip()
    if spec in _BUILTIN_FIXED:
        return _BUILTIN_FIXED[spec]()
    if "(" in spec and spec.endswith(")"):
        head, argstr = spec[:-1].split("(", 1)
        head = head.strip()
        try:
            args = [int(a) for a in argstr.split(",")] if argstr.strip() else []
        except ValueError:
            raise GraphFormatError("bad builtin arguments in %r" % spec) from None
        if head == "k" and len(args) == 1:
            return complete_graph(args[0])
        if head == "k" and len(args) == 2:
            return complete_bipartite(args[0], args[1])
        if head == "wheel" and len(args) == 1:
            return wheel_graph(args[0])
        if head == "cycle" and len(args) == 1:
            return cycle_graph(args[0])
    raise GraphFormatError("unknown builtin graph %r" % spec)


def parse_colour_spec(g: ColouredGraph, spec: str) -> ColouredGraph:
    """Apply `even`, `odd`, `zero`, or an explicit `name=bit,...` list.

    `zero` is all zeros.  `odd` puts a single 1 on the last vertex.  `even`
    is all ones, with the last vertex flipped to 0 when |V| is odd.  Any two
    colourings of equal componentwise parity give isomorphic groups, so these
    canonical picks lose nothing.
    """
    spec = spec.strip()
    n = g.n
    if spec == "zero":
        return g.with_colour((0,) * n)
    if spec == "odd":
        return g.with_colour((0,) * (n - 1) + (1,))
    if spec == "even":
        c = [1] * n
        if n % 2 == 1:
            c[-1] = 0
        return g.with_colour(c)
    c = [0] * n
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise GraphFormatError("bad colour item %r" % item)
        nm, bit = item.split("=", 1)
        nm, bit = nm.strip(), bit.strip()
        if bit not in ("0", "1"):
            raise GraphFormatError("colour for %r must be 0 or 1" % nm)
        try:
            c[g.vertex_id(nm)] = int(bit)
        except KeyError:
            raise GraphFormatError("unknown vertex %r in colour spec" % nm) from None
    return g.with_colour(c)


# ---------------------------------------------------------------------------
# Components.

def component_ids(g: ColouredGraph):
    """List of (vertex_ids, edge_ids), ascending ids, sorted by smallest vertex."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v) in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    comps = []
    for root in sorted(groups):
        cv = sorted(groups[root])
        cvset = set(cv)
        ce = [e for e, (u, v) in enumerate(g.edges) if u in cvset]
        comps.append((tuple(cv), tuple(ce)))
    return comps


def subgraph(g: ColouredGraph, vertex_ids, edge_ids) -> ColouredGraph:
    """Relabelled subgraph on the given ids (order preserved); names kept."""
    vmap = {v: i for i, v in enumerate(vertex_ids)}
    return ColouredGraph(
        tuple(g.vertex_names[v] for v in vertex_ids),
        tuple(g.colour[v] for v in vertex_ids),
        tuple(g.edge_names[e] for e in edge_ids),
        tuple((vmap[g.edges[e][0]], vmap[g.edges[e][1]]) for e in edge_ids),
    )


def connected_components(g: ColouredGraph) -> list[ColouredGraph]:
    """Component subgraphs, sorted by smallest original vertex id."""
    return [subgraph(g, cv, ce) for cv, ce in component_ids(g)]
