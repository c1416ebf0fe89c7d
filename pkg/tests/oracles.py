"""Independent reference implementations used to freeze expected values.

Everything here is deliberately self-contained: a tiny polynomial arithmetic
over Q(i) built on pairs of Fractions, a Sylvester resultant with a
subset-memo determinant, staircase counting for monomial ideals, and a
Fraction Gaussian determinant.  None of it imports the package under test,
so the two code paths can disagree only if one of them is wrong.

Polynomials are dicts mapping exponent tuples to (Fraction, Fraction)
pairs, the real and imaginary parts of the coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

Coeff = tuple[Fraction, Fraction]

C_ZERO: Coeff = (Fraction(0), Fraction(0))
C_ONE: Coeff = (Fraction(1), Fraction(0))


def c_add(a: Coeff, b: Coeff) -> Coeff:
    return (a[0] + b[0], a[1] + b[1])


def c_mul(a: Coeff, b: Coeff) -> Coeff:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def c_neg(a: Coeff) -> Coeff:
    return (-a[0], -a[1])


def c_is_zero(a: Coeff) -> bool:
    return a[0] == 0 and a[1] == 0


def c_div(a: Coeff, b: Coeff) -> Coeff:
    n = b[0] * b[0] + b[1] * b[1]
    if n == 0:
        raise ZeroDivisionError("division by zero coefficient")
    re = (a[0] * b[0] + a[1] * b[1]) / n
    im = (a[1] * b[0] - a[0] * b[1]) / n
    return (re, im)


def p_clean(p: dict) -> dict:
    return {e: c for e, c in p.items() if not c_is_zero(c)}


def p_add(p: dict, q: dict) -> dict:
    r = dict(p)
    for e, c in q.items():
        r[e] = c_add(r.get(e, C_ZERO), c)
    return p_clean(r)


def p_neg(p: dict) -> dict:
    return {e: c_neg(c) for e, c in p.items()}


def p_sub(p: dict, q: dict) -> dict:
    return p_add(p, p_neg(q))


def p_mul(p: dict, q: dict) -> dict:
    r: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            r[e] = c_add(r.get(e, C_ZERO), c_mul(c1, c2))
    return p_clean(r)


def p_const(c: Coeff, nvars: int) -> dict:
    e = (0,) * nvars
    return {} if c_is_zero(c) else {e: c}


def mono(exps: tuple, re=1, im=0) -> dict:
    c = (Fraction(re), Fraction(im))
    return {} if c_is_zero(c) else {exps: c}


def p_order(p: dict) -> int:
    if not p:
        raise ValueError("zero polynomial has no vanishing order")
    return min(sum(e) for e in p)


def p_unit_normalize(p: dict) -> dict:
    """Scale so the lowest (graded-lex ascending) term has coefficient 1."""
    if not p:
        return p
    low = min(p, key=lambda e: (sum(e), e))
    c = p[low]
    return {e: c_div(v, c) for e, v in p.items()}


def p_eq_up_to_unit(p: dict, q: dict) -> bool:
    return p_unit_normalize(p_clean(dict(p))) == p_unit_normalize(p_clean(dict(q)))


# ---------------------------------------------------------------------------
# Sylvester resultant.  Input polynomials live in n variables; the resultant
# eliminates variable `var` and returns a polynomial in the remaining
# variables (same tuple layout, eliminated slot forced to exponent 0).


def _coeffs_in_var(p: dict, var: int) -> list:
    deg = max((e[var] for e in p), default=0)
    out = [dict() for _ in range(deg + 1)]
    for e, c in p.items():
        rest = tuple(0 if i == var else x for i, x in enumerate(e))
        out[e[var]][rest] = c_add(out[e[var]].get(rest, C_ZERO), c)
    return [p_clean(q) for q in out]


def _det_subset_memo(rows: list) -> dict:
    """Determinant of a matrix with polynomial entries, expansion along rows
    with memoization on the set of used columns."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = None
    for row in rows:
        for cell in row:
            for e in cell:
                nvars = len(e)
                break
            if nvars is not None:
                break
        if nvars is not None:
            break
    if nvars is None:
        return {}
    memo: dict[int, dict] = {(1 << n) - 1 - ((1 << n) - 1): None}  # placeholder
    memo = {}

    def rec(row: int, used: int) -> dict:
        if row == n:
            return p_const(C_ONE, nvars)
        key = used
        if key in memo:
            return memo[key]
        acc: dict = {}
        sign = 1
        for col in range(n):
            bit = 1 << col
            if used & bit:
                continue
            cell = rows[row][col]
            if cell:
                sub = rec(row + 1, used | bit)
                term = p_mul(cell, sub)
                acc = p_add(acc, term if sign > 0 else p_neg(term))
            sign = -sign
        memo[key] = acc
        return acc

    return rec(0, 0)


def resultant(p: dict, q: dict, var: int) -> dict:
    pc = _coeffs_in_var(p, var)
    qc = _coeffs_in_var(q, var)
    m, n = len(pc) - 1, len(qc) - 1
    nvars = None
    for poly in (p, q):
        for e in poly:
            nvars = len(e)
            break
        if nvars is not None:
            break
    if nvars is None:
        raise ValueError("resultant of zero polynomials")
    if m <= 0 and n <= 0:
        return p_const(C_ONE, nvars)
    if m <= 0:
        out = p_const(C_ONE, nvars)
        for _ in range(n):
            out = p_mul(out, pc[0] if pc else {})
        return out
    if n <= 0:
        out = p_const(C_ONE, nvars)
        for _ in range(m):
            out = p_mul(out, qc[0] if qc else {})
        return out
    size = m + n
    rows = []
    for i in range(n):
        row = [dict() for _ in range(size)]
        for j, cell in enumerate(reversed(pc)):
            row[i + j] = cell
        rows.append(row)
    for i in range(m):
        row = [dict() for _ in range(size)]
        for j, cell in enumerate(reversed(qc)):
            row[i + j] = cell
        rows.append(row)
    return _det_subset_memo(rows)


# ---------------------------------------------------------------------------
# Reference intersection multiplicity of two plane curve germs: the order at
# the origin of the resultant eliminating the second variable, after a shear
# making the first axis generic.  Sound for the hand-picked fixtures below
# (each was checked for shear genericity by trying several shears).


def intersection_order(p: dict, q: dict, shears=((0, 0), (1, 0), (2, 1), (3, 2))) -> int:
    best = None
    for a, b in shears:
        if 1 - a * b == 0:
            continue
        sp = _shear(p, a, b)
        sq = _shear(q, a, b)
        r = resultant(sp, sq, 1)
        if not r:
            continue
        o = p_order(r)
        best = o if best is None else min(best, o)
    if best is None:
        raise ValueError("resultant vanished for every shear (common factor)")
    return best


def _shear(p: dict, a: int, b: int) -> dict:
    # (x, y) -> (x + a*y, y + b*x)
    x = p_add(mono((1, 0)), mono((0, 1), a))
    y = p_add(mono((0, 1)), mono((1, 0), b))
    out: dict = {}
    for (e1, e2), c in p.items():
        term = p_const(c, 2)
        for _ in range(e1):
            term = p_mul(term, x)
        for _ in range(e2):
            term = p_mul(term, y)
        out = p_add(out, term)
    return out


# ---------------------------------------------------------------------------
# Brute-force double-point curve for corank-1 germs (s, t^h, q(s,t)): the
# resultant in t' of the divided differences of q and t^h.


def double_curve_corank1(h: int, q: dict) -> dict:
    """q is a polynomial in (s, t) as a 2-variable dict; the result is a
    2-variable dict in (s, t), normalized so the lowest term has coefficient 1.
    Works in three variables (s, t, t') internally."""
    P: dict = {}
    for (a, b), c in q.items():
        # s^a * (t^b - t'^b) / (t - t') = s^a * sum_{j<b} t^j t'^(b-1-j)
        for j in range(b):
            e = (a, j, b - 1 - j)
            P[e] = c_add(P.get(e, C_ZERO), c)
    P = p_clean(P)
    Q: dict = {}
    for j in range(h):
        Q[(0, j, h - 1 - j)] = C_ONE
    r = resultant(P, Q, 2)
    out = {(e[0], e[1]): c for e, c in r.items()}
    return p_unit_normalize(p_clean(out))


# ---------------------------------------------------------------------------
# Staircase counting for monomial ideals in n variables: the codimension is
# the number of monomials divisible by no generator (scan a bounding box).


def staircase_codim(generators: list, bound: int = 64) -> int:
    nvars = len(generators[0])
    count = 0
    for exps in product(range(bound + 1), repeat=nvars):
        if any(all(e >= g for e, g in zip(exps, gen)) for gen in generators):
            continue
        if max(exps) >= bound:
            raise ValueError("bounding box too small; quotient may be infinite")
        count += 1
    return count


# ---------------------------------------------------------------------------
# Exact determinant of an integer/rational matrix (Fraction Gaussian
# elimination), used to cross-check plumbing intersection determinants.


def fraction_det(rows: list) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            f = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    return det


def chain_det(eulers: list) -> Fraction:
    """Determinant of the intersection matrix of a straight chain of
    vertices with the given Euler numbers (all edges plain)."""
    n = len(eulers)
    rows = [[0] * n for _ in range(n)]
    for i, e in enumerate(eulers):
        rows[i][i] = e
        if i + 1 < n:
            rows[i][i + 1] = 1
            rows[i + 1][i] = 1
    return fraction_det(rows)
