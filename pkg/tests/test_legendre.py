import random
from fractions import Fraction

import pytest

from stablecovers.errors import DegenerateLambda, NotSingular, WrongCharacteristic
from stablecovers.field import QQ, P1Point, ff_make, p1_points
from stablecovers.legendre import (
    ANHARMONIC,
    LegendreCurve,
    SingularityType,
    Symmetry,
    apply_anharmonic,
    apply_symmetry,
    blowup_branch_count,
    char2_singular_point,
    fixed_points,
    geometric_fixed_point_count,
    j_from_lambda,
    lambda_orbit,
    singularity_type,
    tangent_cone,
)


def _lambdas(F):
    return [a for a in F.elements() if not a.is_zero() and a != 1]


def _singular_by_hand(lam):
    # oracle: partial derivatives written out by hand, evaluated pointwise
    F = lam.field
    pts = []
    for x in F.elements():
        for y in F.elements():
            f = y * y - x * (x - 1) * (x - lam)
            fx = -(3 * x * x - 2 * (1 + lam) * x + lam)
            fy = 2 * y
            if f.is_zero() and fx.is_zero() and fy.is_zero():
                pts.append((x, y))
    return pts


def _fixed_by_search(which, lam):
    F = lam.field
    return {pt for pt in p1_points(F) if apply_symmetry(which, lam, pt) == pt}


@pytest.mark.parametrize("k", [2, 3, 4])
def test_char2_singular_point(k):
    F = ff_make(2, k)
    for lam in _lambdas(F):
        cert = char2_singular_point(lam)
        assert cert.ok()
        assert cert.x * cert.x == lam
        assert cert.y == lam + cert.x
        assert _singular_by_hand(lam) == [(cert.x, cert.y)]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_char2_not_a_node(k):
    F = ff_make(2, k)
    for lam in _lambdas(F):
        rep = singularity_type(lam)
        assert rep.kind is SingularityType.NON_NODE
        A, B, C = rep.tangent_form
        assert B.is_zero() and rep.perfect_square
        assert blowup_branch_count(lam) == 1


def test_gf4_example():
    F = ff_make(2, 2)
    t = F.gen()
    cert = char2_singular_point(t)
    assert (cert.x, cert.y) == (t + 1, F.one())
    A, B, C = tangent_cone(LegendreCurve(t), cert.x, cert.y)
    # u^2 coefficient is 3 sqrt(l) + (1 + l); it vanishes here since t^2 + t + 1 = 0
    assert (A, B, C) == (F.zero(), F.zero(), F.one())


@pytest.mark.parametrize("p,k", [(3, 1), (3, 2), (5, 1), (7, 1)])
def test_odd_characteristic_smooth(p, k):
    F = ff_make(p, k)
    for lam in _lambdas(F):
        assert _singular_by_hand(lam) == []
        with pytest.raises(NotSingular):
            singularity_type(lam)


def test_rational_smooth():
    with pytest.raises(NotSingular):
        singularity_type(QQ(5))


def test_char2_only():
    with pytest.raises(WrongCharacteristic):
        char2_singular_point(ff_make(3, 2).gen())


@pytest.mark.parametrize("k", [2, 3, 4])
def test_symmetries_share_fixed_point(k):
    F = ff_make(2, k)
    for lam in _lambdas(F):
        s = char2_singular_point(lam).x
        for which in Symmetry:
            fixed = fixed_points(which, lam)
            assert fixed == {P1Point.finite(s)} == _fixed_by_search(which, lam)
            assert geometric_fixed_point_count(which, lam) == 1


@pytest.mark.parametrize("p,k", [(3, 2), (5, 1), (7, 1)])
def test_fixed_points_odd(p, k):
    F = ff_make(p, k)
    for lam in _lambdas(F):
        for which in Symmetry:
            found = fixed_points(which, lam)
            assert found == _fixed_by_search(which, lam)
            assert len(found) <= geometric_fixed_point_count(which, lam) == 2


def test_fixed_points_rational():
    assert fixed_points("inv", QQ(4)) == {P1Point.finite(QQ(2)), P1Point.finite(QQ(-2))}
    # x^2 - 8x + 4 has irrational roots
    assert fixed_points("cross", QQ(4)) == frozenset()
    assert geometric_fixed_point_count("cross", QQ(4)) == 2


def test_degenerate_lambda():
    for v in (0, 1):
        with pytest.raises(DegenerateLambda):
            LegendreCurve(QQ(v))
        with pytest.raises(DegenerateLambda):
            lambda_orbit(QQ(v))


def test_known_j_values():
    assert j_from_lambda(QQ(-1)).value == 1728
    assert j_from_lambda(QQ(2)).value == 1728
    F = ff_make(7)
    # lambda = -omega with omega a primitive cube root of unity: 3 in GF(7)
    assert j_from_lambda(-F(2)).is_zero()
    with pytest.raises(WrongCharacteristic):
        j_from_lambda(ff_make(2, 2).gen())


@pytest.mark.parametrize("p,k", [(3, 2), (3, 3), (5, 2), (7, 1)])
def test_j_constant_on_orbit(p, k):
    F = ff_make(p, k)
    for lam in _lambdas(F):
        js = {j_from_lambda(mu) for mu in lambda_orbit(lam)}
        assert len(js) == 1


def test_j_constant_on_orbit_rational():
    rng = random.Random(7)
    for _ in range(50):
        lam = QQ(Fraction(rng.randint(-99, 99), rng.randint(1, 99)))
        if lam.is_zero() or lam == 1:
            continue
        assert len({j_from_lambda(mu) for mu in lambda_orbit(lam)}) == 1


def test_anharmonic_matrices_match_orbit():
    lam = QQ(Fraction(5, 7))
    values = [apply_anharmonic(name, P1Point.finite(lam)).value for name in ANHARMONIC]
    assert values == list(lambda_orbit(lam))


def test_anharmonic_permutes_boundary():
    F = ff_make(2, 2)
    boundary = {P1Point.finite(F.zero()), P1Point.finite(F.one()), P1Point.infinity(F)}
    for name in ANHARMONIC:
        assert {apply_anharmonic(name, pt) for pt in boundary} == boundary
