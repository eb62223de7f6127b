import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablecovers.errors import (
    CompositeCharacteristic,
    DivisionByZero,
    FieldMismatch,
    IndeterminatePoint,
    ParseError,
    UnsupportedDegree,
)
from stablecovers.field import (
    MODULUS_TABLE,
    QQ,
    P1Point,
    _poly_mul,
    arith,
    ff_make,
    format_literal,
    frobenius,
    is_irreducible,
    p1_normalize,
    p1_points,
    parse_field,
    parse_literal,
    parse_p1,
    sqrt_char2,
)

SMALL = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)]


def _irreducible_by_search(coeffs, p):
    # oracle: no monic factor of degree 1..deg/2 divides it
    n = len(coeffs) - 1
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            f = list(low) + [1]
            for q in itertools.product(range(p), repeat=n - d + 1):
                if list(_poly_mul(f, list(q), p)) == list(coeffs):
                    return False
    return True


def test_fixed_moduli():
    assert ff_make(2, 2).modulus == (1, 1, 1)
    assert ff_make(2, 3).modulus == (1, 1, 0, 1)
    assert ff_make(2, 4).modulus == (1, 1, 0, 0, 1)
    assert ff_make(3, 2).modulus == (1, 0, 1)
    assert ff_make(3, 3).modulus == (1, 2, 0, 1)
    for (p, k), mod in MODULUS_TABLE.items():
        assert len(mod) == k + 1 and mod[-1] == 1


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_moduli_irreducible_by_search(p, k):
    mod = ff_make(p, k).modulus
    assert is_irreducible(mod, p)
    assert _irreducible_by_search(mod, p)


def test_rabin_matches_search():
    for n in (2, 3, 4):
        for low in itertools.product(range(2), repeat=n):
            f = list(low) + [1]
            assert is_irreducible(f, 2) == _irreducible_by_search(f, 2), f


def test_bad_specs():
    with pytest.raises(CompositeCharacteristic):
        ff_make(4)
    with pytest.raises(UnsupportedDegree):
        ff_make(2, 9)
    with pytest.raises(ParseError):
        parse_field("2^x")
    assert parse_field("Q") is QQ
    assert parse_field("2^2") is ff_make(2, 2)


@pytest.mark.parametrize("p,k", SMALL)
def test_field_axioms_exhaustive(p, k):
    F = ff_make(p, k)
    els = list(F.elements())
    assert len(els) == p ** k == len(set(els))
    one, zero = F.one(), F.zero()
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        assert sum([a] * p, zero) == zero
        if a:
            assert a * a.inverse() == one
            assert a ** (F.order - 1) == one
    if F.order <= 16:
        for a, b in itertools.product(els, repeat=2):
            assert a * b == b * a
            assert (a + b) ** p == a ** p + b ** p


def test_multiplicative_group_cyclic():
    # the generator t has full order in GF(4), GF(8), GF(16) with these moduli
    for k in (2, 3, 4):
        F = ff_make(2, k)
        t = F.gen()
        seen = {t ** i for i in range(F.order - 1)}
        assert len(seen) == F.order - 1


def test_gf4_table():
    F = ff_make(2, 2)
    t = F.gen()
    assert t * t == t + 1
    assert t ** 3 == 1
    assert (t + 1).inverse() == t


def test_division_by_zero():
    F = ff_make(2, 2)
    with pytest.raises(DivisionByZero):
        F.one() / F.zero()
    with pytest.raises(ZeroDivisionError):
        QQ(1) / QQ(0)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        ff_make(2, 2).one() + ff_make(2, 3).one()


def test_rationals_exact():
    a, b = QQ(Fraction(1, 3)), QQ("-3/4")
    assert (a + b).value == Fraction(-5, 12)
    assert (a / b).value == Fraction(-4, 9)
    assert arith("mul", a, b).value == Fraction(-1, 4)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_sqrt_char2(k):
    F = ff_make(2, k)
    for a in F.elements():
        s = sqrt_char2(a)
        assert s * s == a
        assert frobenius(s) == a


@pytest.mark.parametrize("p,k", SMALL)
def test_literal_round_trip(p, k):
    F = ff_make(p, k)
    for a in F.elements():
        assert parse_literal(F, format_literal(a)) == a


def test_literal_syntax():
    F = ff_make(2, 2)
    assert format_literal(F.gen() + 1) == "t+1"
    assert parse_literal(F, "t^2") == parse_literal(F, "t+1")
    assert parse_literal(ff_make(3, 2), "2t+1").coeffs == (1, 2)
    with pytest.raises(ParseError):
        parse_literal(ff_make(2), "t")
    with pytest.raises(ParseError):
        parse_literal(F, "t+")
    with pytest.raises(ParseError):
        parse_literal(F, "")


def test_p1():
    F = ff_make(2, 2)
    pts = list(p1_points(F))
    assert len(pts) == 5 and pts[-1].is_infinity
    assert parse_p1(F, "inf") == P1Point.infinity(F)
    assert p1_normalize(F.one(), F.zero()).is_infinity
    assert p1_normalize(F.gen(), F.gen()) == P1Point.finite(F.one())
    with pytest.raises(IndeterminatePoint):
        p1_normalize(F.zero(), F.zero())


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_gf256_ring_laws(a, b, c):
    F = ff_make(2, 8)
    x, y, z = F.from_code(a), F.from_code(b), F.from_code(c)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if y:
        assert (x / y) * y == x


@settings(max_examples=200, deadline=None)
@given(st.fractions(), st.fractions())
def test_rational_matches_fraction(a, b):
    assert (QQ(a) * QQ(b)).value == a * b
    assert (QQ(a) - QQ(b)).value == a - b
