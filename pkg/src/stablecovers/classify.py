"""Degenerations of double covers of the 4-pointed line in characteristic 2.

A geometric point of the characteristic-2 fiber is a pair
``(lambda_s, j_s)`` of points of P^1. It lies on the fiber iff
``j_s = 0`` or ``lambda_s`` is one of the boundary values 0, 1, inf. The
classifier names the degeneration type and produces the combinatorial
stable-map type of the limiting map, a degree-2 map whose non-contracted
components are purely inseparable.

Markings are labelled ``"0"``, ``"1"``, ``"inf"``, ``"lambda"``. When
``lambda_s = 0`` the markings 0 and lambda bubble off together, so the
target splits as ``{0, lambda} | {1, inf}``. The cases ``lambda_s = 1``
and ``lambda_s = inf`` are the ``lambda_s = 0`` types with the markings
permuted.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import FieldMismatch, NotOnFiber, WrongCharacteristic
from .field import QQ, Field, FieldElem, P1Point, p1_normalize
from .graph import arithmetic_genus, pointed_stability
from .legendre import ANHARMONIC, apply_anharmonic, char2_singular_point
from .stablemap import (
    CONTRACTED,
    StableMapType,
    degree_conservation,
    finiteness_attributes,
    inseparable,
    map_stability,
    map_validate,
    relabel_map,
    riemann_hurwitz_genus,
)

LABELS = ("0", "1", "inf", "lambda")


class Case(enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE4 = "Case4"


class Component(enum.Enum):
    J0 = "J0"
    L0 = "Lambda0"
    L1 = "Lambda1"
    LINF = "LambdaInf"


_COMPONENT_ORDER = list(Component)


@dataclass(frozen=True)
class H24Point:
    lambda_s: P1Point
    j_s: P1Point

    def __post_init__(self):
        if self.lambda_s.field != self.j_s.field:
            raise FieldMismatch(f"lambda over {self.lambda_s.field!r}, j over {self.j_s.field!r}")
        if self.lambda_s.field.p != 2:
            raise WrongCharacteristic(f"points of the fiber live in characteristic 2, got {self.field!r}")

    @property
    def field(self) -> Field:
        return self.lambda_s.field

    @classmethod
    def from_values(cls, field: Field, lam, j) -> "H24Point":
        """Build from field elements, anything the field coerces, or ``None``
        / ``"inf"`` for the point at infinity."""
        return cls(_p1(field, lam), _p1(field, j))

    def to_dict(self):
        return {"lambda": self.lambda_s.literal(), "j": self.j_s.literal()}


def _p1(field, v) -> P1Point:
    if isinstance(v, P1Point):
        return v
    if v is None or (isinstance(v, str) and v.strip().lower() in ("inf", "infinity")):
        return P1Point.infinity(field)
    return P1Point.finite(field(v))


def _boundary_value(pt: P1Point) -> Optional[str]:
    if pt.is_infinity:
        return "inf"
    if pt.value.is_zero():
        return "0"
    if pt.value == 1:
        return "1"
    return None


def _is_zero(pt: P1Point) -> bool:
    return not pt.is_infinity and pt.value.is_zero()


def component_membership(p: H24Point) -> frozenset:
    """Components of the fiber through ``p``; empty iff ``p`` is not on it."""
    out = set()
    if _is_zero(p.j_s):
        out.add(Component.J0)
    b = _boundary_value(p.lambda_s)
    if b is not None:
        out.add({"0": Component.L0, "1": Component.L1, "inf": Component.LINF}[b])
    return frozenset(out)


# --- the four map types ------------------------------------------------------

def _graph(vertices, edges, legs):
    return {
        "vertices": [{"id": v, "genus": g} for v, g in vertices],
        "edges": [list(e) for e in edges],
        "legs": [{"label": lab, "vertex": v} for lab, v in legs],
    }


_SPLIT_TARGET = _graph(
    [("D1", 0), ("D2", 0)],
    [("D1", "D2")],
    [("0", "D1"), ("lambda", "D1"), ("1", "D2"), ("inf", "D2")],
)
_TAILS = {
    "C0_1": {"legs": ("0", "lambda"), "over": "D1"},
    "C0_2": {"legs": ("1", "inf"), "over": "D2"},
}
_F2 = inseparable(2).to_dict()
_CONTRACTED = CONTRACTED.to_dict()


def _map_data(source, target, vertex_map, edge_map, behavior):
    return {
        "source": source,
        "target": target,
        "vertex_map": vertex_map,
        "edge_map": edge_map,
        "leg_map": {lab: lab for lab in LABELS},
        "degree": {v: (2 if b["kind"] != "contracted" else 0) for v, b in behavior.items()},
        "behavior": behavior,
        "total_degree": 2,
        "genus": 1,
    }


def _case1_data():
    source = _graph([("C0", 0), ("C1", 1)], [("C0", "C1")],
                    [(lab, "C0") for lab in LABELS])
    target = _graph([("D", 0)], [], [(lab, "D") for lab in LABELS])
    return _map_data(source, target,
                     {"C0": "D", "C1": "D"},
                     [{"vertex": "D"}],
                     {"C0": _F2, "C1": _CONTRACTED})


def _split_data(core_vertices, core_edges, attach):
    """Core components all contract to the target node; ``attach`` says
    which core vertex each inseparable tail hangs from."""
    vertices = list(core_vertices) + [(t, 0) for t in _TAILS]
    edges = list(core_edges) + [(attach[t], t) for t in _TAILS]
    legs = [(lab, t) for t, info in _TAILS.items() for lab in info["legs"]]
    vertex_map = {v: {"node": 0} for v, _ in core_vertices}
    vertex_map.update({t: info["over"] for t, info in _TAILS.items()})
    behavior = {v: _CONTRACTED for v, _ in core_vertices}
    behavior.update({t: _F2 for t in _TAILS})
    return _map_data(_graph(vertices, edges, legs), _SPLIT_TARGET, vertex_map,
                     [{"edge": 0}] * len(edges), behavior)


@lru_cache(maxsize=None)
def base_map_type(case: Case) -> StableMapType:
    """The map type of ``case`` at ``lambda_s = 0`` (or generic lambda for Case1)."""
    if case is Case.CASE1:
        data = _case1_data()
    elif case is Case.CASE2:
        # chain: tail - elliptic core - tail
        data = _split_data([("C1", 1)], [], {"C0_1": "C1", "C0_2": "C1"})
    elif case is Case.CASE3:
        # two rational cores glued twice, one tail on each
        data = _split_data([("C1_1", 0), ("C1_2", 0)],
                           [("C1_1", "C1_2"), ("C1_1", "C1_2")],
                           {"C0_1": "C1_1", "C0_2": "C1_2"})
    else:
        # elliptic tail on a rational core carrying both inseparable tails
        data = _split_data([("C1", 1), ("C0p", 0)], [("C1", "C0p")],
                           {"C0_1": "C0p", "C0_2": "C0p"})
    return map_validate(data)


# --- relabeling the markings -------------------------------------------------

_GENERIC = Fraction(5)  # all six anharmonic values of 5 are distinct


def parse_permutation(sigma) -> dict:
    """Accept a dict on the four labels or cycle notation such as
    ``"(0 1)(lambda inf)"``; return the full dict."""
    if isinstance(sigma, dict):
        perm = {str(k): str(v) for k, v in sigma.items()}
    else:
        perm = {}
        text = str(sigma).replace(",", " ")
        for chunk in text.split(")"):
            chunk = chunk.strip().lstrip("(")
            if not chunk:
                continue
            cyc = chunk.split()
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in perm:
                    raise ValueError(f"label {a!r} repeated in {sigma!r}")
                perm[a] = b
    full = {lab: perm.get(lab, lab) for lab in LABELS}
    if set(perm) - set(LABELS) or sorted(full.values()) != sorted(LABELS):
        raise ValueError(f"{sigma!r} is not a permutation of {LABELS}")
    return full


def _bracket(p, q):
    (a0, a1), (b0, b1) = p, q
    return a0 * b1 - a1 * b0


@lru_cache(maxsize=None)
def _anharmonic_for(sigma_items: tuple) -> str:
    sigma = dict(sigma_items)
    inv = {v: k for k, v in sigma.items()}
    lam = QQ(_GENERIC)
    one, zero = QQ.one(), QQ.zero()
    pos = {"0": (zero, one), "1": (one, one), "inf": (one, zero), "lambda": (lam, one)}
    # the marking now called b sits where sigma^-1(b) used to be
    q = {b: pos[inv[b]] for b in LABELS}
    a, b, c, x = q["0"], q["1"], q["inf"], q["lambda"]
    # the Moebius map sending a, b, c to 0, 1, inf, evaluated at x
    new = p1_normalize(_bracket(x, a) * _bracket(b, c), _bracket(x, c) * _bracket(b, a))
    for name in ANHARMONIC:
        if apply_anharmonic(name, P1Point.finite(lam)) == new:
            return name
    raise AssertionError(f"no anharmonic map matches {sigma}")  # unreachable


def anharmonic_for(sigma) -> str:
    """Name of the anharmonic map by which relabeling via ``sigma`` moves lambda."""
    return _anharmonic_for(tuple(sorted(parse_permutation(sigma).items())))


def translate_point(p: H24Point, sigma) -> H24Point:
    """The point obtained by renaming marking ``a`` to ``sigma(a)``; the
    j-invariant does not change."""
    return H24Point(apply_anharmonic(anharmonic_for(sigma), p.lambda_s), p.j_s)


# --- classification ----------------------------------------------------------

@dataclass(frozen=True)
class ClassificationResult:
    point: H24Point
    case_id: Case
    map_type: StableMapType
    components: frozenset
    certificates: dict = field(compare=False)
    attaching_point: Optional[tuple] = None  # Case1: (x, y) on the elliptic curve
    component_j: tuple = ()  # ((source vertex, j literal), ...)

    def ok(self) -> bool:
        return all(v for k, v in self.certificates.items() if k != "finiteness_attributes") and \
            self.certificates["finiteness_attributes"] == {"is_finite": False, "has_inseparable_part": True}

    @property
    def component_count(self) -> int:
        return len(self.map_type.source.vertices)

    def to_dict(self) -> dict:
        return {
            "point": self.point.to_dict(),
            "case": self.case_id.value,
            "components": [c.value for c in _COMPONENT_ORDER if c in self.components],
            "map_type": self.map_type.to_dict(),
            "certificates": dict(self.certificates),
            "attaching_point": (None if self.attaching_point is None
                                else [c.literal() for c in self.attaching_point]),
            "component_j": dict(self.component_j),
        }


def _certificates(M: StableMapType, attaching_ok: Optional[bool]) -> dict:
    checked = map_validate(M.to_dict())
    certs = {
        "map_check": checked == M,
        "genus_check": (arithmetic_genus(M.source) == 1 == riemann_hurwitz_genus(2, 0, 4)
                        and arithmetic_genus(M.target) == 0),
        "stability_check": bool(map_stability(M)) and bool(pointed_stability(M.target)),
        "degree_check": M.total_degree == 2 and degree_conservation(M),
        "finiteness_attributes": finiteness_attributes(M).to_dict(),
    }
    if attaching_ok is not None:
        certs["attaching_check"] = attaching_ok
    return certs


def _attaching(lam: FieldElem):
    cert = char2_singular_point(lam)
    return (cert.x, cert.y), cert.ok()


def _build(p: H24Point, case: Case, M: StableMapType) -> ClassificationResult:
    attaching, ok = None, None
    if case is Case.CASE1:
        attaching, ok = _attaching(p.lambda_s.value)
    core_j = {Case.CASE1: "0", Case.CASE2: p.j_s.literal(), Case.CASE4: "0"}.get(case)
    comp_j = (("C1", core_j),) if core_j is not None else ()
    return ClassificationResult(
        point=p,
        case_id=case,
        map_type=M,
        components=component_membership(p),
        certificates=_certificates(M, ok),
        attaching_point=attaching,
        component_j=comp_j,
    )


_FROM_ZERO = {"1": {"0": "1", "1": "0"}, "inf": {"0": "inf", "inf": "0"}}


def classify(p: H24Point) -> ClassificationResult:
    """Degeneration type and stable-map type of a point of the fiber."""
    b = _boundary_value(p.lambda_s)
    if b is None:
        if not _is_zero(p.j_s):
            raise NotOnFiber(
                f"lambda = {p.lambda_s.literal()} is not 0, 1, inf and j = {p.j_s.literal()} is not 0")
        # the attaching point must be the singular point of the special fiber
        res = _build(p, Case.CASE1, base_map_type(Case.CASE1))
        x, y = res.attaching_point
        assert x * x == p.lambda_s.value and y == p.lambda_s.value + x
        return res
    if p.j_s.is_infinity:
        case = Case.CASE3
    elif p.j_s.value.is_zero():
        case = Case.CASE4
    else:
        case = Case.CASE2
    if b == "0":
        return _build(p, case, base_map_type(case))
    base = _build(H24Point(P1Point.finite(p.field.zero()), p.j_s), case, base_map_type(case))
    return s4_relabel(base, _FROM_ZERO[b])


def s4_relabel(r: ClassificationResult, sigma) -> ClassificationResult:
    """Rename every marking ``a`` to ``sigma(a)`` on source and target and
    move the point accordingly; certificates are recomputed."""
    sigma = parse_permutation(sigma)
    M = relabel_map(r.map_type, leg_names=sigma)
    p = translate_point(r.point, sigma)
    return _build(p, r.case_id, M)


def classify_values(field: Field, lam, j) -> ClassificationResult:
    return classify(H24Point.from_values(field, lam, j))
