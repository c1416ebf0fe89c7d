# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels; semantics match germtools._kernels_py exactly.

Coefficients stay Python ints (they can exceed machine words), so the
speedup comes from removing interpreter dispatch in the inner loops, not
from native integer math.
"""

from math import gcd

BACKEND = "compiled"


cdef inline tuple _norm(object a, object b, object d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(abs(a), abs(b)), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return (a, b, d)


def terms_mul(dict A, dict B):
    cdef dict out = {}
    cdef tuple ea, eb, e, cur
    for ea, ca in A.items():
        a1, b1, d1 = ca
        for eb, cb in B.items():
            a2, b2, d2 = cb
            e = tuple([x + y for x, y in zip(ea, eb)])
            ra = a1 * a2 - b1 * b2
            rb = a1 * b2 + b1 * a2
            rd = d1 * d2
            cur = out.get(e)
            if cur is None:
                out[e] = (ra, rb, rd)
            else:
                ca2, cb2, cd2 = cur
                out[e] = (ca2 * rd + ra * cd2, cb2 * rd + rb * cd2, cd2 * rd)
    cdef dict clean = {}
    for e, c in out.items():
        a, b, d = c
        if a or b:
            clean[e] = _norm(a, b, d)
    return clean


def row_reduce(list rows):
    cdef dict pivots = {}
    cdef dict row, piv, scaled
    for source in rows:
        row = dict(source)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                fa, fb, fd = row[c]
                n = fa * fa + fb * fb
                ia, ib, id_ = _norm(fa * fd, -fb * fd, n)
                scaled = {}
                for k, cv in row.items():
                    a, b, d = cv
                    ra = a * ia - b * ib
                    rb = a * ib + b * ia
                    if ra or rb:
                        scaled[k] = _norm(ra, rb, d * id_)
                pivots[c] = scaled
                break
            fa, fb, fd = row[c]
            for k, pv in piv.items():
                pa, pb, pd = pv
                ra = fa * pa - fb * pb
                rb = fa * pb + fb * pa
                rd = fd * pd
                cur = row.get(k)
                if cur is None:
                    row[k] = _norm(-ra, -rb, rd)
                else:
                    ca, cb, cd = cur
                    na = ca * rd - ra * cd
                    nb = cb * rd - rb * cd
                    if na or nb:
                        row[k] = _norm(na, nb, cd * rd)
                    else:
                        del row[k]
    return pivots


def vec_reduces_to_zero(dict vec, dict pivots):
    cdef dict row = dict(vec)
    cdef dict piv
    while row:
        c = min(row)
        piv = pivots.get(c)
        if piv is None:
            return False
        fa, fb, fd = row[c]
        for k, pv in piv.items():
            pa, pb, pd = pv
            ra = fa * pa - fb * pb
            rb = fa * pb + fb * pa
            rd = fd * pd
            cur = row.get(k)
            if cur is None:
                row[k] = _norm(-ra, -rb, rd)
            else:
                ca, cb, cd = cur
                na = ca * rd - ra * cd
                nb = cb * rd - rb * cd
                if na or nb:
                    row[k] = _norm(na, nb, cd * rd)
                else:
                    del row[k]
    return True
