import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablecovers.errors import DanglingReference, Disconnected, DuplicateMarking, GraphError
from stablecovers.graph import (
    arithmetic_genus,
    betti_number,
    contract_edge,
    graph_validate,
    graph_violations,
    make_graph,
    pointed_stability,
    relabel_graph,
)


def _data(vertices, edges=(), legs=()):
    return {
        "vertices": [{"id": v, "genus": g} for v, g in vertices],
        "edges": [list(e) for e in edges],
        "legs": [{"label": lab, "vertex": v} for lab, v in legs],
    }


def test_banana_genus():
    G = make_graph({"A": 0, "B": 0}, [("A", "B"), ("A", "B")])
    assert betti_number(G) == 1
    assert arithmetic_genus(G) == 1


def test_loop_genus_and_valence():
    G = make_graph({"A": 0}, [("A", "A")], {"p": "A"})
    assert G.valence("A") == 2
    assert arithmetic_genus(G) == 1
    assert pointed_stability(G).stable


def test_stability():
    G = make_graph({"A": 0, "B": 1}, [("A", "B")], {"x": "A", "y": "A"})
    assert pointed_stability(G).stable
    H = make_graph({"A": 0, "B": 1}, [("A", "B")], {"x": "A"})
    rep = pointed_stability(H)
    assert not rep and rep.unstable_vertices == ("A",)


def test_all_violations_reported():
    data = _data([("A", 0), ("B", 0), ("C", 0)], [("A", "Z")], [("x", "A"), ("x", "B")])
    kinds = {v.kind for v in graph_violations(data)}
    assert {"DanglingReference", "DuplicateMarking"} <= kinds
    with pytest.raises(GraphError) as exc:
        graph_validate(data)
    assert len(exc.value.violations) >= 2


def test_disconnected():
    with pytest.raises(Disconnected):
        graph_validate(_data([("A", 0), ("B", 0)]))


def test_duplicate_marking():
    with pytest.raises(DuplicateMarking):
        graph_validate(_data([("A", 0)], legs=[("x", "A"), ("x", "A")]))


def test_dangling_leg():
    with pytest.raises(DanglingReference):
        graph_validate(_data([("A", 0)], legs=[("x", "Q")]))


def test_round_trip():
    G = make_graph({"A": 1, "B": 0}, [("A", "B"), ("B", "B")], {"1": "B"})
    assert graph_validate(G.to_dict()) == G


# random connected multigraphs: a spanning tree plus extra edges
@st.composite
def graphs(draw):
    n = draw(st.integers(1, 5))
    ids = [f"v{i}" for i in range(n)]
    genera = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    edges = [(ids[draw(st.integers(0, i - 1))], ids[i]) for i in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=4))
    edges += [(ids[a], ids[b]) for a, b in extra]
    legs = {f"m{i}": ids[draw(st.integers(0, n - 1))] for i in range(draw(st.integers(0, 4)))}
    return make_graph(dict(zip(ids, genera)), edges, legs)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_contraction_preserves_genus(G):
    for i in range(len(G.edges)):
        H = contract_edge(G, i)
        assert arithmetic_genus(H) == arithmetic_genus(G)
        assert sorted(lab for lab, _ in H.legs) == sorted(lab for lab, _ in G.legs)
        assert not graph_violations(H.to_dict())


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_relabel_preserves_invariants(G):
    names = {v: "r_" + v for v in G.vertex_ids}
    legs = {lab: "L" + lab for lab, _ in G.legs}
    H = relabel_graph(G, names, legs)
    assert arithmetic_genus(H) == arithmetic_genus(G)
    assert pointed_stability(H).stable == pointed_stability(G).stable
    back = relabel_graph(H, {v: k for k, v in names.items()}, {v: k for k, v in legs.items()})
    assert sorted(back.edges) == sorted(G.edges)
    assert back.vertices == G.vertices
