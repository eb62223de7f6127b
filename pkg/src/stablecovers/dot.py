"""Graphviz DOT drawings of stable-map types.

Source components sit in an upper cluster, target components in a lower
one. Nodes of a curve are undirected solid edges (parallel nodes become
multi-edges); the map is drawn with dashed arrows. A component contracted
onto a node of the target gets one dashed arrow to each branch through
that node.
"""
from __future__ import annotations

from .stablemap import StableMapType


def _q(s: str) -> str:
    s = str(s).replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return '"' + s + '"'


def _vertex_label(G, v, extra=()):
    lines = [v, f"g={G.genus_of(v)}"]
    lines += list(extra)
    legs = G.legs_on(v)
    if legs:
        lines.append("legs: " + ", ".join(legs))
    return "\n".join(lines)


def render_map_dot(M: StableMapType, name: str = "stable_map", notes=None) -> str:
    """``notes`` maps source vertex ids to extra label lines."""
    notes = notes or {}
    S, T = M.source, M.target
    out = [f"digraph {_q(name)} {{", "  rankdir=TB;", "  node [shape=circle];"]

    out.append("  subgraph cluster_source {")
    out.append('    label="source";')
    for v in S.vertex_ids:
        b = M.behavior_of(v)
        extra = []
        if b.kind == "inseparable":
            extra.append(f"F{'²' if b.insep_degree == 2 else '^' + str(b.insep_degree)}")
        if b.kind != "contracted":
            extra.append(f"deg {M.degree_of(v)}")
        extra += notes.get(v, [])
        shape = "doublecircle" if b.kind == "contracted" else "circle"
        out.append(f"    {_q('s:' + v)} [label={_q(_vertex_label(S, v, extra))}, shape={shape}];")
    for a, b in S.edges:
        out.append(f"    {_q('s:' + a)} -> {_q('s:' + b)} [dir=none];")
    out.append("  }")

    out.append("  subgraph cluster_target {")
    out.append('    label="target";')
    for v in T.vertex_ids:
        out.append(f"    {_q('t:' + v)} [label={_q(_vertex_label(T, v))}];")
    for a, b in T.edges:
        out.append(f"    {_q('t:' + a)} -> {_q('t:' + b)} [dir=none];")
    out.append("  }")

    for v, w in M.vertex_map:
        if isinstance(w, tuple):
            a, b = T.edges[w[1]]
            for end in (a, b):
                out.append(f"  {_q('s:' + v)} -> {_q('t:' + end)} "
                           f"[style=dashed, label={_q(f'node {w[1]}')}];")
        else:
            out.append(f"  {_q('s:' + v)} -> {_q('t:' + w)} [style=dashed];")
    out.append("}")
    return "\n".join(out) + "\n"


def render_dot(r) -> str:
    """DOT drawing of a classification result."""
    notes = {v: [f"j={j}"] for v, j in r.component_j}
    if r.attaching_point is not None:
        x, y = (c.literal() for c in r.attaching_point)
        for v, _ in r.map_type.behavior:
            if r.map_type.behavior_of(v).kind == "contracted":
                notes.setdefault(v, []).append(f"at ({x}, {y})")
    return render_map_dot(r.map_type, name=r.case_id.value.lower(), notes=notes)
