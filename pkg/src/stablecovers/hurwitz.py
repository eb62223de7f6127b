"""Hurwitz numbers of simply branched covers of P^1 via monodromy.

Permutations act on ``{0, ..., d-1}`` internally; the public tuple format
uses 1-based pairs ``(i, j)`` with ``i < j``. A sequence of factors
``t_1, ..., t_n`` multiplies left to right: the product sends ``x`` to
``t_n(... t_1(x))``. For involutions the identity-product condition does
not depend on this convention, but conjugation and prefix products do.
"""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import _kernels
from .errors import ScaleCap
from .stablemap import riemann_hurwitz_genus

MAX_DEGREE = 6
MAX_BRANCH = 10
ORACLE_MAX_BRANCH = 12


@dataclass(frozen=True)
class MonodromyTuple:
    d: int
    factors: tuple  # ((i, j), ...) 1-based, i < j

    def product(self) -> tuple:
        perm = list(range(self.d))
        for i, j in self.factors:
            a, b = i - 1, j - 1
            perm = [b if y == a else a if y == b else y for y in perm]
        return tuple(perm)

    def is_transitive(self) -> bool:
        parent = list(range(self.d))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.factors:
            parent[find(i - 1)] = find(j - 1)
        return len({find(x) for x in range(self.d)}) == 1

    def is_valid(self) -> bool:
        return self.product() == tuple(range(self.d)) and self.is_transitive()

    def conjugate(self, sigma) -> "MonodromyTuple":
        """Conjugate every factor by ``sigma`` (a 0-based image list)."""
        out = []
        for i, j in self.factors:
            a, b = sigma[i - 1] + 1, sigma[j - 1] + 1
            out.append((min(a, b), max(a, b)))
        return MonodromyTuple(self.d, tuple(out))


def _check_scale(d, n, max_n=MAX_BRANCH):
    if d < 1 or n < 0:
        raise ValueError(f"need d >= 1 and n >= 0, got d={d}, n={n}")
    if d > MAX_DEGREE or n > max_n:
        raise ScaleCap(f"(d={d}, n={n}) exceeds the cap d <= {MAX_DEGREE}, n <= {max_n}")


def iter_simple_monodromy(d: int, n: int) -> Iterator[MonodromyTuple]:
    """Yield every transitive n-tuple of transpositions in S_d with identity
    product, in lexicographic order of the factor sequence.

    Backtracking prunes a prefix when the remaining factors cannot (i) undo
    the prefix product, whose transposition length is ``d - #cycles`` and
    whose parity is fixed, or (ii) merge the current orbits into one.
    """
    _check_scale(d, n)
    trans = _kernels.transpositions(d)
    prefix = []

    def cycles(perm):
        seen, c = set(), 0
        for s in range(d):
            if s not in seen:
                c += 1
                while s not in seen:
                    seen.add(s)
                    s = perm[s]
        return c

    def rec(perm, orb, norb, rem):
        need = d - cycles(perm)
        if rem == 0:
            if need == 0 and norb == 1:
                yield MonodromyTuple(d, tuple((i + 1, j + 1) for i, j in prefix))
            return
        if need > rem or (rem - need) % 2 or norb - 1 > rem:
            return
        for i, j in trans:
            p2 = [j if y == i else i if y == j else y for y in perm]
            oi, oj = orb[i], orb[j]
            if oi != oj:
                o2, n2 = [oi if o == oj else o for o in orb], norb - 1
            else:
                o2, n2 = orb, norb
            prefix.append((i, j))
            yield from rec(p2, o2, n2, rem - 1)
            prefix.pop()

    yield from rec(list(range(d)), list(range(d)), d, n)


def enumerate_simple_monodromy(d: int, n: int) -> list:
    return list(iter_simple_monodromy(d, n))


def count_simple_monodromy(d: int, n: int, workers: int = 1) -> int:
    """Number of tuples :func:`iter_simple_monodromy` would yield, computed
    by the kernel without materializing them.

    With ``workers > 1`` the search splits on the first factor across
    processes; the sum does not depend on scheduling.
    """
    _check_scale(d, n)
    if workers <= 1 or n == 0 or d < 2:
        return _kernels.count_transitive(d, n)
    nt = d * (d - 1) // 2
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_kernels.count_transitive, [d] * nt, [n] * nt, range(nt))
        return sum(parts)


def hurwitz_number(d: int, n: int) -> Fraction:
    """Raw tuple count divided by ``d!`` (covers weighted by 1/|Aut|)."""
    return Fraction(count_simple_monodromy(d, n), math.factorial(d))


def tuple_genus(t: MonodromyTuple) -> int:
    return riemann_hurwitz_genus(t.d, 0, len(t.factors))


# --- independent oracle ------------------------------------------------------

@lru_cache(maxsize=None)
def _identity_product_counts(d: int, n_max: int) -> tuple:
    """``counts[m]`` = number of m-tuples of transpositions in S_d with
    identity product, for m = 0..n_max, by repeated convolution with the
    transposition class over the group algebra."""
    trans = [(i, j) for i in range(d) for j in range(i + 1, d)]
    ident = tuple(range(d))
    dist = Counter({ident: 1})
    counts = [1]
    for _ in range(n_max):
        nxt = Counter()
        for perm, c in dist.items():
            for i, j in trans:
                # right-multiply: x -> t(perm(x))
                nxt[tuple(j if y == i else i if y == j else y for y in perm)] += c
        dist = nxt
        counts.append(dist.get(ident, 0))
    return tuple(counts)


def product_one_count(d: int, n: int) -> int:
    """Tuples with identity product, transitive or not."""
    if d == 0:
        return 1 if n == 0 else 0
    return _identity_product_counts(d, max(n, ORACLE_MAX_BRANCH))[n]


@lru_cache(maxsize=None)
def _transitive_count(d: int, n: int) -> int:
    # Sort tuples by the orbit B containing element 0 (size k, m factors).
    # The other factors form an arbitrary identity-product tuple on the
    # complement; the interleaving is a choice of m positions out of n.
    # Subtracting the k < d terms from the total leaves the transitive part.
    if d == 1:
        return 1 if n == 0 else 0
    total = product_one_count(d, n)
    for k in range(1, d):
        ways_block = math.comb(d - 1, k - 1)
        for m in range(0, n + 1):
            t = _transitive_count(k, m)
            if t:
                total -= ways_block * math.comb(n, m) * t * product_one_count(d - k, n - m)
    return total


def convolution_oracle(d: int, n: int, transitive: bool = True) -> int:
    """Independent count by group-algebra convolution.

    ``transitive=False`` gives the raw identity-product count; otherwise
    inclusion-exclusion over the set partition of {1..d} into orbits
    removes the intransitive tuples.
    """
    _check_scale(d, n, ORACLE_MAX_BRANCH)
    if not transitive:
        return product_one_count(d, n)
    return _transitive_count(d, n)
