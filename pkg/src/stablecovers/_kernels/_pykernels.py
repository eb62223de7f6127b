"""Pure-Python versions of the hot loops.

Semantics match ``_ckernels.pyx`` exactly; the compiled module is preferred
when it imports.
"""


def transpositions(d):
    """All transpositions of {0..d-1} as pairs (i, j), i < j, in lex order."""
    return [(i, j) for i in range(d) for j in range(i + 1, d)]


def _cycle_count(perm):
    seen = [False] * len(perm)
    c = 0
    for s in range(len(perm)):
        if not seen[s]:
            c += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
    return c


def _rec(d, trans, perm, orb, norb, rem):
    need = d - _cycle_count(perm)
    if rem == 0:
        return 1 if need == 0 and norb == 1 else 0
    if need > rem or (rem - need) & 1 or norb - 1 > rem:
        return 0
    if rem == 1:
        # the last factor is forced: perm must be a single transposition
        moved = [x for x in range(d) if perm[x] != x]
        if len(moved) != 2:
            return 0
        a, b = moved
        merged = norb - (orb[a] != orb[b])
        return 1 if merged == 1 else 0
    total = 0
    for i, j in trans:
        p2 = list(perm)
        for x in range(d):
            y = p2[x]
            if y == i:
                p2[x] = j
            elif y == j:
                p2[x] = i
        oi, oj = orb[i], orb[j]
        if oi != oj:
            o2 = [oi if o == oj else o for o in orb]
            total += _rec(d, trans, p2, o2, norb - 1, rem - 1)
        else:
            total += _rec(d, trans, p2, orb, norb, rem - 1)
    return total


def count_transitive(d, n, first=-1):
    """Count n-tuples of transpositions in S_d with identity product whose
    generated group is transitive. ``first >= 0`` restricts the first factor
    to the transposition with that lex index."""
    trans = transpositions(d)
    ident = list(range(d))
    orb = list(range(d))
    if first < 0:
        return _rec(d, trans, ident, orb, d, n)
    if n == 0:
        return 0
    i, j = trans[first]
    p2 = list(ident)
    p2[i], p2[j] = j, i
    o2 = [i if o == j else o for o in orb]
    return _rec(d, trans, p2, o2, d - 1, n - 1)


def _add_codes(a, b, p, k):
    if p == 2:
        return a ^ b
    out, place = 0, 1
    for _ in range(k):
        a, x = divmod(a, p)
        b, y = divmod(b, p)
        out += ((x + y) % p) * place
        place *= p
    return out


def count_affine_points(p, k, log_tbl, exp_tbl, ysq, lin, rhs):
    """Count pairs (x, y) with ``y^2 + lin[x]*y == rhs[x]`` by brute force.

    Field elements are integer codes; multiplication goes through the
    discrete log tables (``exp_tbl`` has length 2(q-1) so no reduction of
    the exponent sum is needed).
    """
    q = len(ysq)
    count = 0
    for x in range(q):
        L = lin[x]
        R = rhs[x]
        if L == 0:
            for y in range(q):
                if ysq[y] == R:
                    count += 1
            continue
        lL = log_tbl[L]
        for y in range(q):
            v = ysq[y]
            if y:
                v = _add_codes(v, exp_tbl[lL + log_tbl[y]], p, k)
            if v == R:
                count += 1
    return count
