import copy

import pytest

from stablecovers.classify import Case, base_map_type
from stablecovers.errors import (
    BadBehavior,
    ContractedWithDegree,
    GenusMismatch,
    LegMismatch,
    NegativeGenus,
    NonAdjacentImage,
    ParityError,
)
from stablecovers.stablemap import (
    degree_conservation,
    finiteness_attributes,
    isomorphic,
    map_stability,
    map_validate,
    map_violations,
    relabel_map,
    riemann_hurwitz_genus,
)


def _chain():
    return copy.deepcopy(base_map_type(Case.CASE2).to_dict())


def test_riemann_hurwitz():
    assert riemann_hurwitz_genus(2, 0, 4) == 1
    assert riemann_hurwitz_genus(3, 0, 4) == 0
    assert riemann_hurwitz_genus(2, 1, 0) == 1
    assert riemann_hurwitz_genus(1, 0, 0) == 0
    with pytest.raises(ParityError):
        riemann_hurwitz_genus(2, 0, 3)
    with pytest.raises(NegativeGenus):
        riemann_hurwitz_genus(3, 0, 2)


@pytest.mark.parametrize("case", list(Case))
def test_case_types_validate(case):
    M = base_map_type(case)
    assert map_violations(M.to_dict()) == []
    assert map_validate(M.to_dict()) == M
    assert degree_conservation(M)
    assert map_stability(M)
    assert finiteness_attributes(M).to_dict() == {"is_finite": False, "has_inseparable_part": True}


def test_contracted_with_degree():
    data = _chain()
    data["degree"]["C1"] = 2
    with pytest.raises(ContractedWithDegree):
        map_validate(data)


def test_noncontracted_on_node_rejected():
    data = _chain()
    data["vertex_map"]["C0_1"] = {"node": 0}
    kinds = {v.kind for v in map_violations(data)}
    assert "BadBehavior" in kinds


def test_edge_must_land_on_node():
    data = _chain()
    data["edge_map"][0] = {"vertex": "D1"}
    with pytest.raises(NonAdjacentImage):
        map_validate(data)


def test_non_adjacent_target():
    # a contracted point sitting on D2 cannot meet a tail over D1 except at a node
    data = _chain()
    data["vertex_map"]["C1"] = "D2"
    data["edge_map"] = None
    kinds = [v.kind for v in map_violations(data)]
    assert "NonAdjacentImage" in kinds


def test_leg_mismatch():
    data = _chain()
    data["leg_map"] = {"0": "1", "1": "0", "inf": "inf", "lambda": "lambda"}
    with pytest.raises(LegMismatch):
        map_validate(data)


def test_bad_inseparable_degree():
    data = _chain()
    data["behavior"]["C0_1"] = {"kind": "inseparable", "degree": 3}
    with pytest.raises(BadBehavior):
        map_validate(data)


def test_genus_mismatch():
    data = _chain()
    data["genus"] = 2
    with pytest.raises(GenusMismatch):
        map_validate(data)


def test_edge_map_inferred():
    data = _chain()
    del data["edge_map"]
    assert map_validate(data).edge_map == (("edge", 0), ("edge", 0))


def test_unstable_contracted_component():
    data = _chain()
    data["source"]["vertices"][0]["genus"] = 0  # C1 becomes a rational bridge
    data["genus"] = 0
    M = map_validate(data)
    rep = map_stability(M)
    assert not rep and rep.unstable_vertices == ("C1",)


def test_degree_conservation_fails():
    data = _chain()
    data["degree"]["C0_1"] = 4
    data["behavior"]["C0_1"] = {"kind": "inseparable", "degree": 2}
    assert not degree_conservation(map_validate(data))


def test_isomorphic_under_renaming():
    M = base_map_type(Case.CASE4)
    N = relabel_map(M, {"C1": "E", "C0p": "R", "C0_1": "T1", "C0_2": "T2"}, {"D1": "X", "D2": "Y"})
    assert N != M
    assert isomorphic(M, N)
    assert not isomorphic(M, base_map_type(Case.CASE3))
    swapped = relabel_map(M, leg_names={"0": "1", "1": "0"})
    assert not isomorphic(M, swapped)
