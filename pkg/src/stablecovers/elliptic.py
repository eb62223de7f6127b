"""Weierstrass curves ``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6``.

j-invariant, discriminant, brute-force point counting, the trace-of-
Frobenius supersingularity test and, in characteristic 2, the count of
rational 2-torsion points.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from . import _kernels
from .errors import ScaleCap, SingularCurve, WrongCharacteristic
from .field import Field, FieldElem

POINT_COUNT_CAP = 1 << 16


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: FieldElem
    a2: FieldElem
    a3: FieldElem
    a4: FieldElem
    a6: FieldElem

    def __post_init__(self):
        if self.discriminant().is_zero():
            raise SingularCurve(f"discriminant vanishes for {self.coeff_literals()}")

    @classmethod
    def from_coeffs(cls, field: Field, coeffs) -> "WeierstrassCurve":
        """``coeffs`` is ``(a1, a2, a3, a4, a6)`` as anything the field coerces."""
        if len(coeffs) != 5:
            raise ValueError("need five coefficients a1, a2, a3, a4, a6")
        return cls(*(field(c) for c in coeffs))

    @property
    def field(self) -> Field:
        return self.a1.field

    def coeffs(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def coeff_literals(self) -> list:
        return [c.literal() for c in self.coeffs()]

    # b8 is the integral expansion of (b2 b6 - b4^2) / 4, so no division
    # by 4 happens and the formulas hold in characteristic 2.
    def b_invariants(self) -> tuple:
        a1, a2, a3, a4, a6 = self.coeffs()
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c4(self) -> FieldElem:
        b2, b4, _, _ = self.b_invariants()
        return b2 * b2 - 24 * b4

    def discriminant(self) -> FieldElem:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def contains(self, x: FieldElem, y: FieldElem) -> bool:
        a1, a2, a3, a4, a6 = self.coeffs()
        lhs = y * y + a1 * x * y + a3 * y
        rhs = x ** 3 + a2 * x * x + a4 * x + a6
        return lhs == rhs

    def translate_x(self, c) -> "WeierstrassCurve":
        """The curve in the coordinate ``x' = x - c`` (substitute ``x -> x' + c``)."""
        c = self.field(c)
        a1, a2, a3, a4, a6 = self.coeffs()
        return WeierstrassCurve(
            a1,
            a2 + 3 * c,
            a3 + a1 * c,
            a4 + 2 * a2 * c + 3 * c * c,
            a6 + a4 * c + a2 * c * c + c ** 3,
        )


def legendre_curve(lam: FieldElem) -> WeierstrassCurve:
    """``y^2 = x(x-1)(x-lam) = x^3 - (1+lam) x^2 + lam x``."""
    F = lam.field
    return WeierstrassCurve(F.zero(), -(1 + lam), F.zero(), lam, F.zero())


def weierstrass_j(E: WeierstrassCurve) -> FieldElem:
    """``j = c4^3 / Delta``."""
    return E.c4() ** 3 / E.discriminant()


def _require_finite(field: Field):
    if field.p == 0:
        raise WrongCharacteristic("point counting needs a finite field")
    if field.order > POINT_COUNT_CAP:
        raise ScaleCap(f"{field!r} has more than {POINT_COUNT_CAP} elements")


@lru_cache(maxsize=None)
def _log_tables(field: Field):
    """Discrete log tables for GF(q)^*: ``exp`` has length 2(q-1)."""
    q = field.order
    if q == 2:
        return [0, 0], [1, 1]
    factors = _prime_divisors(q - 1)
    for g in field.elements():
        if g.is_zero():
            continue
        if all(g ** ((q - 1) // r) != 1 for r in factors):
            break
    exp = [0] * (2 * (q - 1))
    log = [0] * q
    cur = field.one()
    for i in range(q - 1):
        exp[i] = cur.code
        log[cur.code] = i
        cur = cur * g
    for i in range(q - 1, 2 * (q - 1)):
        exp[i] = exp[i - (q - 1)]
    return log, exp


def _prime_divisors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _tables(E: WeierstrassCurve):
    F = E.field
    a1, a2, a3, a4, a6 = E.coeffs()
    ysq, lin, rhs = [], [], []
    for x in F.elements():
        ysq.append((x * x).code)
        lin.append((a1 * x + a3).code)
        rhs.append((x ** 3 + a2 * x * x + a4 * x + a6).code)
    return ysq, lin, rhs


def point_count(E: WeierstrassCurve, backend=None) -> int:
    """Number of points over the base field, including infinity, by testing
    every pair ``(x, y)``."""
    F = E.field
    _require_finite(F)
    log, exp = _log_tables(F)
    ysq, lin, rhs = _tables(E)
    kern = backend or _kernels.backend
    return kern.count_affine_points(F.p, F.k, log, exp, ysq, lin, rhs) + 1


def naive_point_count(E: WeierstrassCurve) -> int:
    """Same count through field objects only; a slow cross-check."""
    F = E.field
    _require_finite(F)
    elems = list(F.elements())
    return 1 + sum(1 for x in elems for y in elems if E.contains(x, y))


def trace_of_frobenius(E: WeierstrassCurve) -> int:
    return E.field.order + 1 - point_count(E)


def hasse_ok(E: WeierstrassCurve) -> bool:
    t = trace_of_frobenius(E)
    return t * t <= 4 * E.field.order


def is_supersingular(E: WeierstrassCurve) -> bool:
    return trace_of_frobenius(E) % E.field.p == 0


def two_torsion_count(E: WeierstrassCurve) -> int:
    """Nontrivial rational 2-torsion points in characteristic 2.

    In characteristic 2, ``-P = (x, y + a1 x + a3)``, so ``P = -P`` exactly
    on the line ``a1 x + a3 = 0``.
    """
    F = E.field
    if F.p != 2:
        raise WrongCharacteristic(f"two_torsion_count needs characteristic 2, got {F!r}")
    if F.order > POINT_COUNT_CAP:
        raise ScaleCap(f"{F!r} too large")
    a1, a3 = E.a1, E.a3
    return sum(
        1
        for x in F.elements()
        if (a1 * x + a3).is_zero()
        for y in F.elements()
        if E.contains(x, y)
    )


def all_curves(field: Field):
    """Every nonsingular Weierstrass curve over a finite field (coefficient sweep)."""
    elems = list(field.elements())
    for a1 in elems:
        for a2 in elems:
            for a3 in elems:
                for a4 in elems:
                    for a6 in elems:
                        try:
                            yield WeierstrassCurve(a1, a2, a3, a4, a6)
                        except SingularCurve:
                            continue


def hasse_bound(q: int) -> int:
    """Largest integer ``t`` with ``t^2 <= 4q``."""
    return isqrt(4 * q)
