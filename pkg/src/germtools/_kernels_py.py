"""Pure-Python fallback kernels.

The same three entry points exist in the compiled module
``germtools._kernels``; ``germtools._impl`` picks one at import time.
Coefficients are normalized triples (a, b, d) meaning (a + b*i)/d; the
arithmetic is inlined here on purpose, the call overhead dominates
otherwise.
"""

from __future__ import annotations

from math import gcd

BACKEND = "pure"


def _norm(a: int, b: int, d: int) -> tuple[int, int, int]:
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(abs(a), abs(b)), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return (a, b, d)


def terms_mul(A: dict, B: dict) -> dict:
    """Multiply two sparse term maps {exponent tuple: triple}."""
    out: dict = {}
    for ea, (a1, b1, d1) in A.items():
        for eb, (a2, b2, d2) in B.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            ra = a1 * a2 - b1 * b2
            rb = a1 * b2 + b1 * a2
            rd = d1 * d2
            cur = out.get(e)
            if cur is None:
                out[e] = (ra, rb, rd)
            else:
                ca, cb, cd = cur
                out[e] = (ca * rd + ra * cd, cb * rd + rb * cd, cd * rd)
    clean: dict = {}
    for e, (a, b, d) in out.items():
        if a or b:
            clean[e] = _norm(a, b, d)
    return clean


def row_reduce(rows: list) -> dict:
    """Sparse Gaussian elimination over Q(i).

    ``rows`` is a list of {column index: triple} maps; columns are assumed
    pre-sorted so that smaller indices mean lower degree.  Returns the pivot
    map {pivot column: reduced row with leading coefficient 1}.  Rows are
    consumed in order, which keeps the procedure deterministic.
    """
    pivots: dict = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                fa, fb, fd = row[c]
                n = fa * fa + fb * fb
                ia, ib, id_ = _norm(fa * fd, -fb * fd, n)
                scaled = {}
                for k, (a, b, d) in row.items():
                    ra = a * ia - b * ib
                    rb = a * ib + b * ia
                    if ra or rb:
                        scaled[k] = _norm(ra, rb, d * id_)
                pivots[c] = scaled
                break
            fa, fb, fd = row[c]
            for k, (pa, pb, pd) in piv.items():
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


def vec_reduces_to_zero(vec: dict, pivots: dict) -> bool:
    """Whether the vector lies in the row space spanned by the pivots."""
    row = dict(vec)
    while row:
        c = min(row)
        piv = pivots.get(c)
        if piv is None:
            return False
        fa, fb, fd = row[c]
        for k, (pa, pb, pd) in piv.items():
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
