"""Legendre curves ``y^2 = x(x-1)(x-lambda)``.

Covers the lambda-to-j map away from characteristic 2, the orbit of
lambda under relabeling the four branch points, and the characteristic-2
picture: the curve acquires exactly one singular point, at
``x = sqrt(lambda)``, it is unibranch rather than a node, and the two
Moebius symmetries of the branch points both fix exactly that point.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import DegenerateLambda, NotSingular, ScaleCap, WrongCharacteristic
from .field import Field, FieldElem, P1Point, p1_normalize, sqrt_char2
from .poly import Poly2

EXHAUSTIVE_CAP = 1 << 16


def _check_lambda(lam: FieldElem):
    if lam.is_zero() or lam == 1:
        raise DegenerateLambda(f"lambda = {lam.literal()} makes the curve degenerate")


@dataclass(frozen=True)
class LegendreCurve:
    lam: FieldElem

    def __post_init__(self):
        _check_lambda(self.lam)

    @property
    def field(self) -> Field:
        return self.lam.field

    def equation(self) -> Poly2:
        """``F = y^2 - x(x-1)(x-lambda)``; the curve is ``F = 0``."""
        x, y = Poly2.x(self.field), Poly2.y(self.field)
        return y * y - x * (x - 1) * (x - self.lam)

    def cubic(self) -> list:
        """Coefficients (low to high) of ``x(x-1)(x-lambda)``."""
        lam = self.lam
        one = self.field.one()
        return [self.field.zero(), lam, -(one + lam), one]


def _as_curve(c) -> LegendreCurve:
    return c if isinstance(c, LegendreCurve) else LegendreCurve(c)


def j_from_lambda(lam: FieldElem) -> FieldElem:
    """``j = 2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)``."""
    if lam.field.p == 2:
        raise WrongCharacteristic("the Legendre form degenerates in characteristic 2")
    _check_lambda(lam)
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


ORBIT_NAMES = ("l", "1-l", "1/l", "1/(1-l)", "(l-1)/l", "l/(l-1)")

# Each anharmonic function as a matrix acting on [l : 1].
ANHARMONIC = {
    "l": ((1, 0), (0, 1)),
    "1-l": ((-1, 1), (0, 1)),
    "1/l": ((0, 1), (1, 0)),
    "1/(1-l)": ((0, 1), (-1, 1)),
    "(l-1)/l": ((1, -1), (1, 0)),
    "l/(l-1)": ((1, 0), (1, -1)),
}


def lambda_orbit(lam: FieldElem) -> tuple:
    """The six values ``l, 1-l, 1/l, 1/(1-l), (l-1)/l, l/(l-1)`` (with repeats)."""
    _check_lambda(lam)
    return (
        lam,
        1 - lam,
        1 / lam,
        1 / (1 - lam),
        (lam - 1) / lam,
        lam / (lam - 1),
    )


def orbit_multiset(lam: FieldElem) -> Counter:
    return Counter(lambda_orbit(lam))


def apply_anharmonic(name: str, point: P1Point) -> P1Point:
    """Extend an anharmonic function to P^1 via its matrix."""
    (a, b), (c, d) = ANHARMONIC[name]
    x0, x1 = point.homogeneous()
    return p1_normalize(a * x0 + b * x1, c * x0 + d * x1)


# --- characteristic 2 singular point -----------------------------------------

@dataclass(frozen=True)
class SingularPointCertificate:
    x: FieldElem
    y: FieldElem
    on_curve: bool  # F(x, y) == 0
    dfdx_vanishes: bool
    dfdy_identically_zero: bool
    dfdx: Poly2  # reduces to x^2 + lambda
    exhaustive_singular_points: tuple  # all affine singular points over the field
    smooth_at_infinity: bool
    unique: bool

    def ok(self) -> bool:
        return (self.on_curve and self.dfdx_vanishes and self.dfdy_identically_zero
                and self.smooth_at_infinity and self.unique)


def _require_char2(field: Field):
    if field.p != 2:
        raise WrongCharacteristic(f"characteristic-2 analysis called over {field!r}")


def _affine_singular_points(curve: LegendreCurve):
    F = curve.equation()
    Fx, Fy = F.diff("x"), F.diff("y")
    field = curve.field
    if field.order > EXHAUSTIVE_CAP:
        raise ScaleCap(f"{field!r} too large for exhaustive search")
    pts = []
    for x in field.elements():
        for y in field.elements():
            if F(x, y).is_zero() and Fx(x, y).is_zero() and Fy(x, y).is_zero():
                pts.append((x, y))
    return tuple(pts)


def _smooth_at_infinity(curve: LegendreCurve) -> bool:
    # Chart Y = 1 of the projective closure Y^2 Z = X(X - Z)(X - lam Z):
    # G(X, Z) = Z - X (X - Z)(X - lam Z), checked at (X, Z) = (0, 0).
    field = curve.field
    X, Z = Poly2.x(field), Poly2.y(field)
    G = Z - X * (X - Z) * (X - curve.lam * Z)
    zero = field.zero()
    return not (G.diff("x")(zero, zero).is_zero() and G.diff("y")(zero, zero).is_zero())


def char2_singular_point(curve) -> SingularPointCertificate:
    """Locate the singular point ``(sqrt(l), l + sqrt(l))`` and certify it.

    In characteristic 2 ``dF/dy = 2y`` vanishes identically and
    ``dF/dx`` reduces to ``x^2 + l``, whose only root (over any extension,
    Frobenius being injective) is ``sqrt(l)``; ``y`` is then the unique
    square root of the right-hand side. The exhaustive search over the
    field and the check at infinity are carried along as a second witness.
    """
    lam = curve.lam if isinstance(curve, LegendreCurve) else curve
    _require_char2(lam.field)
    curve = _as_curve(curve)
    F = curve.equation()
    Fx, Fy = F.diff("x"), F.diff("y")
    s = sqrt_char2(lam)
    y = lam + s
    exhaustive = _affine_singular_points(curve)
    x_poly = Poly2.x(curve.field)
    return SingularPointCertificate(
        x=s,
        y=y,
        on_curve=F(s, y).is_zero(),
        dfdx_vanishes=Fx(s, y).is_zero(),
        dfdy_identically_zero=Fy.is_zero(),
        dfdx=Fx,
        exhaustive_singular_points=exhaustive,
        smooth_at_infinity=_smooth_at_infinity(curve),
        unique=(exhaustive == ((s, y),) and Fx == x_poly * x_poly + lam),
    )


class SingularityType(enum.Enum):
    NODE = "Node"
    NON_NODE = "NonNode"


@dataclass(frozen=True)
class SingularityReport:
    kind: SingularityType
    point: tuple
    tangent_form: tuple  # (A, B, C) of A u^2 + B u v + C v^2
    perfect_square: bool


def _singular_points_any_char(curve: LegendreCurve):
    if curve.field.p:
        return _affine_singular_points(curve)
    # Over Q a singular point has y = 0 and a repeated root of the cubic;
    # the roots 0, 1, l are distinct since l is not 0 or 1.
    return ()


def tangent_cone(curve: LegendreCurve, x0: FieldElem, y0: FieldElem) -> tuple:
    """Degree-2 part ``(A, B, C)`` of F at ``(x0, y0)`` in local coordinates."""
    field = curve.field
    u, v = Poly2.x(field), Poly2.y(field)
    local = curve.equation().compose(u + x0, v + y0)
    if not (local.homogeneous_part(0).is_zero() and local.homogeneous_part(1).is_zero()):
        raise NotSingular(f"({x0}, {y0}) is not a singular point")
    q = local.homogeneous_part(2)
    return (q.coeff(2, 0), q.coeff(1, 1), q.coeff(0, 2))


def singularity_type(curve) -> SingularityReport:
    """Node iff the tangent cone is two distinct lines: ``B^2 - 4AC != 0``.

    In characteristic 2 that discriminant is ``B^2`` and the cone of the
    Legendre curve has ``B = 0``, i.e. it is the double line
    ``(v + sqrt(A/C) u)^2``.
    """
    curve = _as_curve(curve)
    pts = _singular_points_any_char(curve)
    if not pts:
        raise NotSingular(f"Legendre curve with lambda = {curve.lam} is smooth")
    x0, y0 = pts[0]
    A, B, C = tangent_cone(curve, x0, y0)
    disc = B * B - 4 * A * C
    if A.is_zero() and B.is_zero() and C.is_zero():
        kind = SingularityType.NON_NODE  # triple or worse point
    else:
        kind = SingularityType.NODE if disc else SingularityType.NON_NODE
    return SingularityReport(kind, (x0, y0), (A, B, C), not disc)


def blowup_branch_count(curve) -> Optional[int]:
    """Branches through the singular point, counted after one blowup.

    Blows up the singular point, finds where the strict transform meets the
    exceptional line by exhaustive search over the base field (both charts),
    and counts one branch per intersection point at which the strict
    transform is smooth. Returns ``None`` if some intersection point is
    still singular (one blowup does not decide).
    """
    curve = _as_curve(curve)
    field = curve.field
    pts = _singular_points_any_char(curve)
    if not pts:
        raise NotSingular(f"Legendre curve with lambda = {curve.lam} is smooth")
    x0, y0 = pts[0]
    u, w = Poly2.x(field), Poly2.y(field)
    F = curve.equation()
    # chart 1: x = x0 + u, y = y0 + w u
    strict1 = F.compose(u + x0, w * u + y0).divide_by_x_power(2)
    # chart 2: x = x0 + z v, y = y0 + v ; only the direction z = 0 is new
    z, v = Poly2.x(field), Poly2.y(field)
    local2 = F.compose(z * v + x0, v + y0)
    strict2 = Poly2(field, {(i, j - 2): c for (i, j), c in local2.terms.items()})
    zero = field.zero()
    branches = 0
    for wv in field.elements():
        if strict1(zero, wv).is_zero():
            if strict1.diff("x")(zero, wv).is_zero() and strict1.diff("y")(zero, wv).is_zero():
                return None
            branches += 1
    if strict2(zero, zero).is_zero():
        if strict2.diff("x")(zero, zero).is_zero() and strict2.diff("y")(zero, zero).is_zero():
            return None
        branches += 1
    return branches


# --- fixed points of the two symmetries --------------------------------------

class Symmetry(enum.Enum):
    INV = "inv"  # x -> l / x: swaps 0 <-> inf and 1 <-> l
    CROSS = "cross"  # x -> (x - 1) / (x / l - 1): swaps 0 <-> 1 and inf <-> l


def symmetry_matrix(which: Symmetry, lam: FieldElem) -> tuple:
    one, zero = lam.field.one(), lam.field.zero()
    if which is Symmetry.INV:
        return ((zero, lam), (one, zero))
    return ((one, -one), (lam.inverse(), -one))


def apply_symmetry(which: Symmetry, lam: FieldElem, point: P1Point) -> P1Point:
    (a, b), (c, d) = symmetry_matrix(which, lam)
    x0, x1 = point.homogeneous()
    return p1_normalize(a * x0 + b * x1, c * x0 + d * x1)


def _fixed_point_form(which, lam):
    # [X : Z] is fixed by [[a, b], [c, d]] iff (aX + bZ) Z - (cX + dZ) X = 0
    (a, b), (c, d) = symmetry_matrix(which, lam)
    return (-c, a - d, b)  # coefficients of X^2, XZ, Z^2


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _quadratic_roots(A, B, C, field: Field):
    """Roots in P^1(field) of the binary form A X^2 + B XZ + C Z^2."""
    roots = set()
    if A.is_zero():
        roots.add(P1Point.infinity(field))
    if field.p:
        if field.order > EXHAUSTIVE_CAP:
            raise ScaleCap(f"{field!r} too large for exhaustive search")
        for x in field.elements():
            if (A * x * x + B * x + C).is_zero():
                roots.add(P1Point.finite(x))
        return roots
    if A.is_zero():
        if not B.is_zero():
            roots.add(P1Point.finite(-C / B))
        return roots
    disc = B * B - 4 * A * C
    r = _rational_sqrt(disc.value)
    if r is not None:
        for sgn in (1, -1):
            roots.add(P1Point.finite((-B + sgn * field(r)) / (2 * A)))
    return roots


def fixed_points(which, lam: FieldElem) -> frozenset:
    """Fixed points of a branch-point symmetry in P^1 of the parent field.

    Over Q, irrational fixed points (in the quadratic extension) are not
    listed; :func:`geometric_fixed_point_count` counts them.
    """
    which = Symmetry(which) if not isinstance(which, Symmetry) else which
    _check_lambda(lam)
    A, B, C = _fixed_point_form(which, lam)
    roots = frozenset(_quadratic_roots(A, B, C, lam.field))
    (a, b), (c, d) = symmetry_matrix(which, lam)
    for pt in roots:
        x0, x1 = pt.homogeneous()
        # a fixed point is never a pole: the image is a genuine point
        assert not ((a * x0 + b * x1).is_zero() and (c * x0 + d * x1).is_zero())
    return roots


def geometric_fixed_point_count(which, lam: FieldElem) -> int:
    """Distinct fixed points over an algebraic closure: 1 if the fixed-point
    form has zero discriminant, else 2."""
    which = Symmetry(which) if not isinstance(which, Symmetry) else which
    _check_lambda(lam)
    A, B, C = _fixed_point_form(which, lam)
    return 1 if (B * B - 4 * A * C).is_zero() else 2
