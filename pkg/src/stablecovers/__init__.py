"""Hurwitz counts, stable-map types and the characteristic-2 degenerations
of double covers of the 4-pointed projective line."""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .classify import (
    Case,
    ClassificationResult,
    Component,
    H24Point,
    classify,
    component_membership,
    s4_relabel,
    translate_point,
)
from .dot import render_dot, render_map_dot
from .elliptic import (
    WeierstrassCurve,
    is_supersingular,
    point_count,
    trace_of_frobenius,
    two_torsion_count,
    weierstrass_j,
)
from .field import QQ, Field, FieldElem, P1Point, ff_make, parse_field, parse_literal, parse_p1
from .graph import DualGraph, arithmetic_genus, graph_validate, graph_violations, pointed_stability
from .hurwitz import (
    MonodromyTuple,
    convolution_oracle,
    count_simple_monodromy,
    enumerate_simple_monodromy,
    hurwitz_number,
)
from .legendre import (
    LegendreCurve,
    SingularityType,
    Symmetry,
    char2_singular_point,
    fixed_points,
    j_from_lambda,
    lambda_orbit,
    singularity_type,
)
from .stablemap import (
    StableMapType,
    degree_conservation,
    finiteness_attributes,
    map_stability,
    map_validate,
    map_violations,
    riemann_hurwitz_genus,
)

__all__ = [
    "BACKEND", "Case", "ClassificationResult", "Component", "DualGraph", "Field", "FieldElem",
    "H24Point", "LegendreCurve", "MonodromyTuple", "P1Point", "QQ", "SingularityType",
    "StableMapType", "Symmetry", "WeierstrassCurve", "arithmetic_genus", "char2_singular_point",
    "classify", "component_membership", "convolution_oracle", "count_simple_monodromy",
    "degree_conservation", "enumerate_simple_monodromy", "ff_make", "finiteness_attributes",
    "fixed_points", "graph_validate", "graph_violations", "hurwitz_number", "is_supersingular",
    "j_from_lambda", "lambda_orbit", "map_stability", "map_validate", "map_violations",
    "parse_field", "parse_literal", "parse_p1", "point_count", "pointed_stability",
    "render_dot", "render_map_dot", "riemann_hurwitz_genus", "s4_relabel", "singularity_type",
    "trace_of_frobenius", "translate_point", "two_torsion_count", "weierstrass_j",
]
