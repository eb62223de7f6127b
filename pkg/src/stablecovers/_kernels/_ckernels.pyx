# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Mirrors _pykernels.py line for line."""

cdef enum:
    MAXD = 8
    MAXT = 28


cdef int _cycle_count(const int* perm, int d) nogil:
    cdef int seen[MAXD]
    cdef int s, x, c = 0
    for s in range(d):
        seen[s] = 0
    for s in range(d):
        if not seen[s]:
            c += 1
            x = s
            while not seen[x]:
                seen[x] = 1
                x = perm[x]
    return c


cdef long long _rec(int d, int nt, const int* ti, const int* tj,
                    const int* perm, const int* orb, int norb, int rem) nogil:
    cdef int need = d - _cycle_count(perm, d)
    cdef int p2[MAXD]
    cdef int o2[MAXD]
    cdef int x, y, t, i, j, oi, oj, a, b, nmoved
    cdef long long total = 0
    if rem == 0:
        return 1 if (need == 0 and norb == 1) else 0
    if need > rem or ((rem - need) & 1) or norb - 1 > rem:
        return 0
    if rem == 1:
        nmoved = 0
        a = -1
        b = -1
        for x in range(d):
            if perm[x] != x:
                nmoved += 1
                if a < 0:
                    a = x
                else:
                    b = x
        if nmoved != 2:
            return 0
        if orb[a] != orb[b]:
            return 1 if norb - 1 == 1 else 0
        return 1 if norb == 1 else 0
    for t in range(nt):
        i = ti[t]
        j = tj[t]
        for x in range(d):
            y = perm[x]
            if y == i:
                p2[x] = j
            elif y == j:
                p2[x] = i
            else:
                p2[x] = y
        oi = orb[i]
        oj = orb[j]
        if oi != oj:
            for x in range(d):
                o2[x] = oi if orb[x] == oj else orb[x]
            total += _rec(d, nt, ti, tj, p2, o2, norb - 1, rem - 1)
        else:
            total += _rec(d, nt, ti, tj, p2, orb, norb, rem - 1)
    return total


def count_transitive(int d, int n, int first=-1):
    cdef int ti[MAXT]
    cdef int tj[MAXT]
    cdef int perm[MAXD]
    cdef int orb[MAXD]
    cdef int nt = 0, i, j, x
    cdef long long result
    if d < 1 or d > MAXD:
        raise ValueError("degree out of kernel range")
    for i in range(d):
        for j in range(i + 1, d):
            ti[nt] = i
            tj[nt] = j
            nt += 1
    for x in range(d):
        perm[x] = x
        orb[x] = x
    if first < 0:
        with nogil:
            result = _rec(d, nt, ti, tj, perm, orb, d, n)
        return result
    if n == 0:
        return 0
    i = ti[first]
    j = tj[first]
    perm[i] = j
    perm[j] = i
    orb[j] = i
    with nogil:
        result = _rec(d, nt, ti, tj, perm, orb, d - 1, n - 1)
    return result


cdef inline long _add_codes(long a, long b, long p, int k) nogil:
    cdef long out = 0, place = 1, x, y
    cdef int s
    if p == 2:
        return a ^ b
    for s in range(k):
        x = a % p
        y = b % p
        a //= p
        b //= p
        out += ((x + y) % p) * place
        place *= p
    return out


def count_affine_points(long p, int k, log_tbl, exp_tbl, ysq, lin, rhs):
    cdef long q = len(ysq)
    cdef long[:] lg = _as_long(log_tbl)
    cdef long[:] ex = _as_long(exp_tbl)
    cdef long[:] sq = _as_long(ysq)
    cdef long[:] ln = _as_long(lin)
    cdef long[:] rh = _as_long(rhs)
    cdef long x, y, L, R, lL, v
    cdef long long count = 0
    with nogil:
        for x in range(q):
            L = ln[x]
            R = rh[x]
            if L == 0:
                for y in range(q):
                    if sq[y] == R:
                        count += 1
                continue
            lL = lg[L]
            for y in range(q):
                v = sq[y]
                if y:
                    v = _add_codes(v, ex[lL + lg[y]], p, k)
                if v == R:
                    count += 1
    return count


cdef _as_long(seq):
    from array import array
    return array("l", seq)
