import itertools
import math
from fractions import Fraction

import pytest

from stablecovers.errors import ScaleCap
from stablecovers.hurwitz import (
    MonodromyTuple,
    convolution_oracle,
    count_simple_monodromy,
    enumerate_simple_monodromy,
    hurwitz_number,
    tuple_genus,
)


def _brute_force(d, n):
    # every n-tuple of transpositions, filtered directly
    trans = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    return sum(
        1 for fs in itertools.product(trans, repeat=n) if MonodromyTuple(d, fs).is_valid()
    )


@pytest.mark.parametrize("d,n", [(d, n) for d in range(1, 5) for n in range(0, 6)
                                 if (d * (d - 1) // 2) ** n <= 50000])
def test_enumeration_matches_brute_force(d, n):
    tuples = enumerate_simple_monodromy(d, n)
    assert len(tuples) == _brute_force(d, n) == count_simple_monodromy(d, n)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_genus_zero_closed_form(d):
    # connected genus-0 simple covers: (2d-2)! d^(d-3) monodromy tuples
    n = 2 * d - 2
    expected = Fraction(math.factorial(2 * d - 2) * d ** d, d ** 3)
    assert count_simple_monodromy(d, n) == expected
    assert convolution_oracle(d, n) == expected


def test_anchors():
    assert count_simple_monodromy(2, 4) == 1
    assert count_simple_monodromy(3, 4) == 24
    assert hurwitz_number(3, 4) == 4
    assert hurwitz_number(2, 4) == Fraction(1, 2)
    assert count_simple_monodromy(4, 6) == 2880


def test_odd_branch_points_give_zero():
    for d in range(2, 6):
        for n in (1, 3, 5, 7):
            assert count_simple_monodromy(d, n) == 0


def test_degree_one():
    assert count_simple_monodromy(1, 0) == 1
    assert count_simple_monodromy(1, 2) == 0


def test_tuples_valid_sorted_unique():
    tuples = enumerate_simple_monodromy(4, 6)
    assert all(t.is_valid() for t in tuples)
    keys = [t.factors for t in tuples]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_closed_under_conjugation():
    tuples = {t.factors for t in enumerate_simple_monodromy(3, 4)}
    for sigma in itertools.permutations(range(3)):
        assert {MonodromyTuple(3, fs).conjugate(sigma).factors for fs in tuples} == tuples


def test_every_tuple_genus():
    for d, n in [(2, 2), (2, 4), (3, 4), (3, 6), (4, 6)]:
        for t in enumerate_simple_monodromy(d, n):
            g = tuple_genus(t)
            assert g >= 0 and 2 * g - 2 == n - 2 * d


def test_intransitive_oracle():
    # d = 2 tuples all have identity product iff n is even
    assert convolution_oracle(2, 4, transitive=False) == 1
    assert convolution_oracle(3, 2, transitive=False) == 3
    assert convolution_oracle(3, 2) == 0


def test_workers_agree():
    assert count_simple_monodromy(4, 6, workers=2) == count_simple_monodromy(4, 6)


def test_scale_cap():
    with pytest.raises(ScaleCap):
        count_simple_monodromy(7, 2)
    with pytest.raises(ScaleCap):
        count_simple_monodromy(3, 11)
    with pytest.raises(ValueError):
        count_simple_monodromy(0, 2)
