"""Combinatorial stable-map types.

A :class:`StableMapType` is a morphism of dual graphs decorated with a
degree and a behaviour tag per source vertex. A non-contracted vertex maps
onto a target vertex. A contracted vertex maps to a point, which is either
a smooth point of a target component (image: that target vertex) or a node
of the target (image: ``("node", i)`` for target edge ``i``). Each source
edge (a node of the source) maps either to a smooth point of a target
component (``("vertex", id)``, a collapsed edge) or to a target node
(``("edge", i)``).

JSON form (source/target use the dual-graph schema)::

    {"source": {...}, "target": {...},
     "vertex_map": {"C0": "D1", "C1": {"node": 0}},
     "edge_map": [{"edge": 0}],
     "leg_map": {"0": "0"}, "degree": {"C0": 2, "C1": 0},
     "behavior": {"C0": {"kind": "inseparable", "degree": 2},
                  "C1": {"kind": "contracted"}},
     "total_degree": 2, "genus": 1}
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BadBehavior,
    ContractedWithDegree,
    DanglingReference,
    GenusMismatch,
    LegMismatch,
    MalformedGraph,
    NegativeGenus,
    NonAdjacentImage,
    ParityError,
)
from .graph import (
    DualGraph,
    Violation,
    arithmetic_genus,
    graph_validate,
    graph_violations,
    raise_violations,
    relabel_graph,
)


@dataclass(frozen=True)
class Behavior:
    kind: str  # "contracted" | "separable" | "inseparable"
    insep_degree: Optional[int] = None

    def to_dict(self):
        if self.kind == "inseparable":
            return {"kind": "inseparable", "degree": self.insep_degree}
        return {"kind": self.kind}

    @classmethod
    def from_dict(cls, data):
        if isinstance(data, str):
            data = {"kind": data}
        kind = data.get("kind")
        if kind == "inseparable":
            return cls("inseparable", data.get("degree"))
        if kind in ("contracted", "separable"):
            return cls(kind)
        raise ValueError(f"unknown behavior {data!r}")

    def __str__(self):
        if self.kind == "inseparable":
            return f"inseparable({self.insep_degree})"
        return self.kind


CONTRACTED = Behavior("contracted")
SEPARABLE = Behavior("separable")


def inseparable(degree: int) -> Behavior:
    return Behavior("inseparable", degree)


def _image_to_json(img):
    return {"node": img[1]} if isinstance(img, tuple) else img


@dataclass(frozen=True)
class StableMapType:
    source: DualGraph
    target: DualGraph
    vertex_map: tuple  # ((source id, target id or ("node", i)), ...)
    edge_map: tuple  # per source edge: ("edge", i) or ("vertex", id)
    leg_map: tuple  # ((source label, target label), ...)
    degree: tuple  # ((source id, int), ...)
    behavior: tuple  # ((source id, Behavior), ...)
    total_degree: int
    genus: Optional[int] = None

    def image(self, v):
        return dict(self.vertex_map)[v]

    def degree_of(self, v) -> int:
        return dict(self.degree)[v]

    def behavior_of(self, v) -> Behavior:
        return dict(self.behavior)[v]

    def to_dict(self) -> dict:
        out = {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "vertex_map": {v: _image_to_json(w) for v, w in self.vertex_map},
            "edge_map": [{kind: ref} for kind, ref in self.edge_map],
            "leg_map": dict(self.leg_map),
            "degree": dict(self.degree),
            "behavior": {v: b.to_dict() for v, b in self.behavior},
            "total_degree": self.total_degree,
        }
        if self.genus is not None:
            out["genus"] = self.genus
        return out

    @classmethod
    def from_dict(cls, data) -> "StableMapType":
        return map_validate(data)


_MAP_ERRORS = {
    "ContractedWithDegree": ContractedWithDegree,
    "NonAdjacentImage": NonAdjacentImage,
    "LegMismatch": LegMismatch,
    "BadBehavior": BadBehavior,
    "GenusMismatch": GenusMismatch,
    "DanglingReference": DanglingReference,
    "MalformedGraph": MalformedGraph,
}


def _prefixed(violations, side):
    return [Violation(v.kind, f"{side}:{v.element}", f"{side}: {v.message}") for v in violations]


def _parse_image(raw, T):
    if isinstance(raw, dict) and set(raw) == {"node"}:
        i = raw["node"]
        if isinstance(i, int) and not isinstance(i, bool) and 0 <= i < len(T.edges):
            return ("node", i)
        return None
    if isinstance(raw, str) and raw in T.vertex_ids:
        return raw
    return None


def _parse_map(data, S, T, out):
    """Normalize raw map data against validated graphs, collecting problems."""
    src_ids = S.vertex_ids
    raw_vm = data.get("vertex_map") or {}
    vm = {}
    for v in src_ids:
        if v not in raw_vm:
            out.append(Violation("DanglingReference", v, f"vertex {v!r} has no image"))
            continue
        img = _parse_image(raw_vm[v], T)
        if img is None:
            out.append(Violation("DanglingReference", v,
                                 f"vertex {v!r} maps to unknown target {raw_vm[v]!r}"))
        else:
            vm[v] = img
    for v in raw_vm:
        if v not in src_ids:
            out.append(Violation("DanglingReference", v, f"vertex_map names unknown vertex {v!r}"))

    degree = {}
    for v in src_ids:
        d = (data.get("degree") or {}).get(v)
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            out.append(Violation("MalformedGraph", v, f"vertex {v!r} has bad degree {d!r}"))
        else:
            degree[v] = d
    behavior = {}
    for v in src_ids:
        raw = (data.get("behavior") or {}).get(v)
        try:
            behavior[v] = Behavior.from_dict(raw)
        except (ValueError, AttributeError, TypeError):
            out.append(Violation("BadBehavior", v, f"vertex {v!r} has bad behavior {raw!r}"))

    raw_edges = data.get("edge_map")
    edge_map = []
    for i in range(len(S.edges)):
        if raw_edges is None:
            edge_map.append(None)
            continue
        if i >= len(raw_edges) or not isinstance(raw_edges[i], dict) or len(raw_edges[i]) != 1:
            out.append(Violation("MalformedGraph", f"edge[{i}]", f"edge {i} has no usable image"))
            edge_map.append(None)
            continue
        (kind, ref), = raw_edges[i].items()
        if kind == "edge" and isinstance(ref, int) and 0 <= ref < len(T.edges):
            edge_map.append(("edge", ref))
        elif kind == "vertex" and isinstance(ref, str) and ref in T.vertex_ids:
            edge_map.append(("vertex", ref))
        else:
            out.append(Violation("DanglingReference", f"edge[{i}]",
                                 f"edge {i} maps to unknown {kind} {ref!r}"))
            edge_map.append(None)
    if raw_edges is not None and len(raw_edges) != len(S.edges):
        out.append(Violation("MalformedGraph", "edge_map",
                             f"edge_map has {len(raw_edges)} entries for {len(S.edges)} edges"))

    raw_legs = data.get("leg_map")
    if raw_legs is None:
        leg_map = {lab: lab for lab, _ in S.legs}
    else:
        leg_map = {str(k): str(v) for k, v in raw_legs.items()}
    return vm, degree, behavior, edge_map, leg_map


def _allowed_edge_images(img, contracted, T):
    """Points of the target a source node on a component with image ``img``
    may map to."""
    if isinstance(img, tuple):
        return {("edge", img[1])}
    if contracted:
        return {("vertex", img)}
    out = {("vertex", img)}
    out.update(("edge", i) for i, e in enumerate(T.edges) if img in e)
    return out


def _check_map(data):
    """Return (violations, resolved edge map)."""
    out = []
    try:
        src_raw, tgt_raw = data["source"], data["target"]
    except (KeyError, TypeError):
        return [Violation("MalformedGraph", "", "map needs 'source' and 'target'")], None
    out += _prefixed(graph_violations(src_raw), "source")
    out += _prefixed(graph_violations(tgt_raw), "target")
    if out:
        return out, None
    S, T = graph_validate(src_raw), graph_validate(tgt_raw)
    vm, degree, behavior, edge_map, leg_map = _parse_map(data, S, T, out)
    if out:
        return out, None

    for v in S.vertex_ids:
        b, d = behavior[v], degree[v]
        if b.kind == "contracted" and d != 0:
            out.append(Violation("ContractedWithDegree", v,
                                 f"contracted vertex {v!r} has degree {d}"))
        elif b.kind != "contracted" and d == 0:
            out.append(Violation("BadBehavior", v, f"vertex {v!r} has degree 0 but is {b}"))
        elif b.kind == "inseparable":
            e = b.insep_degree
            if not isinstance(e, int) or e < 2 or d % e:
                out.append(Violation("BadBehavior", v,
                                     f"inseparable degree {e!r} incompatible with degree {d}"))
        if b.kind != "contracted" and isinstance(vm[v], tuple):
            out.append(Violation("BadBehavior", v,
                                 f"non-contracted vertex {v!r} cannot map onto a node"))

    for i, (a, b) in enumerate(S.edges):
        allowed = (_allowed_edge_images(vm[a], behavior[a].kind == "contracted", T)
                   & _allowed_edge_images(vm[b], behavior[b].kind == "contracted", T))
        img = edge_map[i]
        if img is None:
            # inferred: prefer collapsing, else the first target node that fits
            if len(allowed) == 1 or any(k == "vertex" for k, _ in allowed):
                img = min(allowed, key=lambda x: (x[0] != "vertex", str(x[1]))) if allowed else None
            elif allowed:
                img = min(allowed, key=lambda x: x[1])
            edge_map[i] = img
        if img is None or img not in allowed:
            out.append(Violation("NonAdjacentImage", f"edge[{i}]",
                                 f"edge {a}-{b} cannot map to {img}; endpoint images "
                                 f"{vm[a]}, {vm[b]} allow {sorted(map(str, allowed)) or 'nothing'}"))

    src_labels = [lab for lab, _ in S.legs]
    tgt_labels = [lab for lab, _ in T.legs]
    if sorted(leg_map) != sorted(src_labels):
        out.append(Violation("LegMismatch", "leg_map", "leg_map keys differ from source markings"))
    elif sorted(leg_map.values()) != sorted(tgt_labels):
        out.append(Violation("LegMismatch", "leg_map", "leg_map is not a bijection onto target markings"))
    else:
        for lab, v in S.legs:
            where = T.leg_vertex(leg_map[lab])
            if vm[v] != where:
                out.append(Violation("LegMismatch", lab,
                                     f"marking {lab!r} lies on {v!r} over {vm[v]!r} but its image "
                                     f"{leg_map[lab]!r} lies on {where!r}"))

    d = data.get("total_degree")
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        out.append(Violation("MalformedGraph", "total_degree", f"bad total degree {d!r}"))
    g = data.get("genus")
    if g is not None and g != arithmetic_genus(S):
        out.append(Violation("GenusMismatch", "genus",
                             f"recorded genus {g} but source has arithmetic genus {arithmetic_genus(S)}"))
    return out, (vm, edge_map)


def map_violations(data) -> list:
    """Every invariant violated by raw map data (empty when valid)."""
    if isinstance(data, StableMapType):
        data = data.to_dict()
    return _check_map(data)[0]


def map_validate(data) -> StableMapType:
    """Check raw map data and return a :class:`StableMapType`."""
    if isinstance(data, StableMapType):
        return data
    violations, resolved = _check_map(data)
    raise_violations(violations, _MAP_ERRORS, what="map")
    vm, edge_map = resolved
    S, T = graph_validate(data["source"]), graph_validate(data["target"])
    legs = data.get("leg_map")
    leg_map = {lab: lab for lab, _ in S.legs} if legs is None else {str(k): str(v) for k, v in legs.items()}
    return StableMapType(
        source=S,
        target=T,
        vertex_map=tuple((v, vm[v]) for v in S.vertex_ids),
        edge_map=tuple(edge_map),
        leg_map=tuple((lab, leg_map[lab]) for lab, _ in S.legs),
        degree=tuple((v, data["degree"][v]) for v in S.vertex_ids),
        behavior=tuple((v, Behavior.from_dict(data["behavior"][v])) for v in S.vertex_ids),
        total_degree=data["total_degree"],
        genus=data.get("genus"),
    )


def degree_conservation(M: StableMapType) -> bool:
    """Each target component is covered with total degree ``d`` by the
    non-contracted source components over it."""
    sums = {w: 0 for w in M.target.vertex_ids}
    beh = dict(M.behavior)
    for v, w in M.vertex_map:
        if beh[v].kind != "contracted":
            sums[w] += M.degree_of(v)
    return all(s == M.total_degree for s in sums.values())


@dataclass(frozen=True)
class MapStabilityReport:
    stable: bool
    unstable_vertices: tuple

    def __bool__(self):
        return self.stable


def map_stability(M: StableMapType) -> MapStabilityReport:
    bad = []
    for v, b in M.behavior:
        if b.kind == "contracted":
            if 2 * M.source.genus_of(v) - 2 + M.source.special_points(v) <= 0:
                bad.append(v)
    return MapStabilityReport(not bad, tuple(bad))


def riemann_hurwitz_genus(d: int, h: int, n: int) -> int:
    """Genus of a simply branched degree-``d`` cover of a genus-``h`` curve
    with ``n`` branch points: ``2g - 2 = n + (2h - 2) d``."""
    twice = n + (2 * h - 2) * d + 2
    if twice % 2:
        raise ParityError(f"n + (2h-2)d = {twice - 2} is odd")
    g = twice // 2
    if g < 0:
        raise NegativeGenus(f"formula gives genus {g}")
    return g


@dataclass(frozen=True)
class FinitenessAttributes:
    is_finite: bool
    has_inseparable_part: bool

    def to_dict(self):
        return {"is_finite": self.is_finite, "has_inseparable_part": self.has_inseparable_part}


def finiteness_attributes(M: StableMapType) -> FinitenessAttributes:
    kinds = [b.kind for _, b in M.behavior]
    return FinitenessAttributes("contracted" not in kinds, "inseparable" in kinds)


def relabel_map(M: StableMapType, source_names=None, target_names=None,
                leg_names=None) -> StableMapType:
    """Rename source vertices, target vertices and (simultaneously on both
    sides) markings. Unmapped names are kept."""
    sn = source_names or {}
    tn = target_names or {}
    ln = leg_names or {}
    T = relabel_graph(M.target, tn, ln)
    return StableMapType(
        source=relabel_graph(M.source, sn, ln),
        target=T,
        vertex_map=tuple((sn.get(v, v), w if isinstance(w, tuple) else tn.get(w, w))
                         for v, w in M.vertex_map),
        edge_map=tuple((k, tn.get(r, r) if k == "vertex" else r) for k, r in M.edge_map),
        leg_map=tuple((ln.get(a, a), ln.get(b, b)) for a, b in M.leg_map),
        degree=tuple((sn.get(v, v), d) for v, d in M.degree),
        behavior=tuple((sn.get(v, v), b) for v, b in M.behavior),
        total_degree=M.total_degree,
        genus=M.genus,
    )


def _normal_form(M: StableMapType):
    S, T = M.source, M.target
    vm, deg, beh = dict(M.vertex_map), dict(M.degree), dict(M.behavior)

    def img(w):
        return ("node",) + T.edges[w[1]] if isinstance(w, tuple) else ("vertex", w)

    def edge_img(e):
        kind, ref = e
        return ("node",) + T.edges[ref] if kind == "edge" else ("vertex", ref)

    return (
        tuple(sorted((v, g, deg[v], str(beh[v]), img(vm[v])) for v, g in S.vertices)),
        tuple(sorted((e, edge_img(i)) for e, i in zip(S.edges, M.edge_map))),
        tuple(sorted(S.legs)),
        tuple(sorted(T.vertices)),
        tuple(sorted(T.edges)),
        tuple(sorted(T.legs)),
        tuple(sorted(M.leg_map)),
        M.total_degree,
    )


def isomorphic(A: StableMapType, B: StableMapType) -> bool:
    """Equal up to renaming source and target vertex ids (markings fixed)."""
    if len(A.source.vertices) != len(B.source.vertices):
        return False
    if len(A.target.vertices) != len(B.target.vertices):
        return False
    target = _normal_form(B)
    sa, ta = A.source.vertex_ids, A.target.vertex_ids
    sb, tb = B.source.vertex_ids, B.target.vertex_ids
    for tperm in itertools.permutations(tb):
        tn = dict(zip(ta, tperm))
        for sperm in itertools.permutations(sb):
            sn = dict(zip(sa, sperm))
            if _normal_form(relabel_map(A, sn, tn)) == target:
                return True
    return False
