"""Dual graphs of nodal pointed curves.

A vertex is an irreducible component with its geometric genus, an edge is
a node (loops allowed), a leg is a marked point. JSON form::

    {"vertices": [{"id": "C0", "genus": 0}],
     "edges": [["C0", "C1"]],
     "legs": [{"label": "0", "vertex": "C0"}]}
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    DanglingReference,
    Disconnected,
    DuplicateMarking,
    GraphError,
    MalformedGraph,
)


@dataclass(frozen=True)
class Violation:
    kind: str
    element: str
    message: str

    def to_dict(self):
        return {"kind": self.kind, "element": self.element, "message": self.message}


_ERRORS = {
    "Disconnected": Disconnected,
    "DuplicateMarking": DuplicateMarking,
    "DanglingReference": DanglingReference,
    "MalformedGraph": MalformedGraph,
}


def raise_violations(violations, errors=_ERRORS, what="graph"):
    if not violations:
        return
    first = violations[0]
    cls = errors.get(first.kind, GraphError)
    detail = "; ".join(v.message for v in violations)
    raise cls(f"invalid {what}: {detail}", violations)


@dataclass(frozen=True)
class DualGraph:
    """A validated dual graph. Build with :func:`graph_validate`."""

    vertices: tuple  # ((id, genus), ...)
    edges: tuple  # ((u, v), ...) with u <= v; a multiset kept in input order
    legs: tuple  # ((label, vertex), ...)
    _genus: Mapping = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_genus", dict(self.vertices))

    @property
    def vertex_ids(self):
        return [v for v, _ in self.vertices]

    def genus_of(self, v) -> int:
        return self._genus[v]

    def legs_on(self, v):
        return [lab for lab, w in self.legs if w == v]

    def leg_vertex(self, label):
        for lab, w in self.legs:
            if lab == label:
                return w
        raise KeyError(label)

    def valence(self, v) -> int:
        """Edge endpoints at ``v``; a loop contributes two."""
        return sum((a == v) + (b == v) for a, b in self.edges)

    def special_points(self, v) -> int:
        return len(self.legs_on(v)) + self.valence(v)

    def neighbours(self, v):
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            if b == v:
                out.add(a)
        return out

    def to_dict(self) -> dict:
        return {
            "vertices": [{"id": v, "genus": g} for v, g in self.vertices],
            "edges": [[a, b] for a, b in self.edges],
            "legs": [{"label": lab, "vertex": v} for lab, v in self.legs],
        }

    @classmethod
    def from_dict(cls, data) -> "DualGraph":
        return graph_validate(data)


def _edge_key(a, b):
    return (a, b) if a <= b else (b, a)


def graph_violations(data) -> list:
    """Every invariant violated by raw graph data (empty when valid)."""
    out = []
    try:
        verts = [(str(v["id"]), v["genus"]) for v in data.get("vertices", [])]
        edges = [tuple(str(x) for x in e) for e in data.get("edges", [])]
        legs = [(str(leg["label"]), str(leg["vertex"])) for leg in data.get("legs", [])]
    except (TypeError, KeyError, AttributeError) as exc:
        return [Violation("MalformedGraph", "", f"malformed graph data: {exc!r}")]

    ids = [v for v, _ in verts]
    for v, n in Counter(ids).items():
        if n > 1:
            out.append(Violation("MalformedGraph", v, f"vertex id {v!r} repeated"))
    for v, g in verts:
        if not isinstance(g, int) or isinstance(g, bool) or g < 0:
            out.append(Violation("MalformedGraph", v, f"vertex {v!r} has bad genus {g!r}"))
    if not ids:
        out.append(Violation("MalformedGraph", "", "graph has no vertices"))
    known = set(ids)
    for i, e in enumerate(edges):
        if len(e) != 2:
            out.append(Violation("MalformedGraph", f"edge[{i}]", f"edge {i} is not a pair"))
            continue
        for x in e:
            if x not in known:
                out.append(Violation("DanglingReference", f"edge[{i}]",
                                     f"edge {i} references unknown vertex {x!r}"))
    for lab, n in Counter(lab for lab, _ in legs).items():
        if n > 1:
            out.append(Violation("DuplicateMarking", lab, f"marking {lab!r} used {n} times"))
    for lab, v in legs:
        if v not in known:
            out.append(Violation("DanglingReference", lab,
                                 f"leg {lab!r} references unknown vertex {v!r}"))
    if any(v.kind == "MalformedGraph" or v.element.startswith("edge[") for v in out):
        return out

    # connectivity by flood fill; dangling legs do not affect it
    adj = {v: set() for v in ids}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    for v in ids:
        if v not in seen:
            out.append(Violation("Disconnected", v, f"vertex {v!r} not connected to {ids[0]!r}"))
    return out


def graph_validate(data) -> DualGraph:
    """Check raw graph data and return a :class:`DualGraph`.

    Raises the error class of the first violation; the exception's
    ``violations`` attribute lists all of them.
    """
    if isinstance(data, DualGraph):
        return data
    raise_violations(graph_violations(data))
    return DualGraph(
        vertices=tuple((str(v["id"]), v["genus"]) for v in data["vertices"]),
        edges=tuple(_edge_key(str(a), str(b)) for a, b in data.get("edges", [])),
        legs=tuple((str(leg["label"]), str(leg["vertex"])) for leg in data.get("legs", [])),
    )


def make_graph(vertices, edges=(), legs=()) -> DualGraph:
    """Shorthand: ``make_graph({"A": 0}, [("A", "A")], {"1": "A"})``."""
    return graph_validate({
        "vertices": [{"id": v, "genus": g} for v, g in dict(vertices).items()],
        "edges": [list(e) for e in edges],
        "legs": [{"label": lab, "vertex": v} for lab, v in dict(legs).items()],
    })


def betti_number(G: DualGraph) -> int:
    return len(G.edges) - len(G.vertices) + 1


def arithmetic_genus(G: DualGraph) -> int:
    """Sum of vertex genera plus the first Betti number of the graph."""
    return sum(g for _, g in G.vertices) + betti_number(G)


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    unstable_vertices: tuple

    def __bool__(self):
        return self.stable


def vertex_is_stable(G: DualGraph, v) -> bool:
    return 2 * G.genus_of(v) - 2 + G.special_points(v) > 0


def pointed_stability(G: DualGraph) -> StabilityReport:
    bad = tuple(v for v in G.vertex_ids if not vertex_is_stable(G, v))
    return StabilityReport(not bad, bad)


def relabel_graph(G: DualGraph, vertex_names=None, leg_names=None) -> DualGraph:
    """Rename vertices and/or markings; unmapped names are kept."""
    vn = vertex_names or {}
    ln = leg_names or {}
    return DualGraph(
        vertices=tuple((vn.get(v, v), g) for v, g in G.vertices),
        edges=tuple(_edge_key(vn.get(a, a), vn.get(b, b)) for a, b in G.edges),
        legs=tuple((ln.get(lab, lab), vn.get(v, v)) for lab, v in G.legs),
    )


def contract_edge(G: DualGraph, index: int) -> DualGraph:
    """Contract edge ``index``. A loop raises the genus of its vertex by one;
    any other edge merges its endpoints into one vertex of summed genus."""
    a, b = G.edges[index]
    rest = G.edges[:index] + G.edges[index + 1:]
    if a == b:
        verts = tuple((v, g + 1 if v == a else g) for v, g in G.vertices)
        return DualGraph(verts, rest, G.legs)
    g_new = G.genus_of(a) + G.genus_of(b)
    verts = tuple((v, g_new if v == a else g) for v, g in G.vertices if v != b)
    edges = tuple(_edge_key(a if x == b else x, a if y == b else y) for x, y in rest)
    legs = tuple((lab, a if v == b else v) for lab, v in G.legs)
    return DualGraph(verts, edges, legs)
