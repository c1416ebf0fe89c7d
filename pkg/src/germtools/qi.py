"""Exact arithmetic over the Gaussian rationals Q(i).

A value is stored as a normalized integer triple ``(a, b, d)`` meaning
``(a + b*i) / d`` with ``d >= 1`` and ``gcd(a, b, d) == 1``.  The triple
helpers are plain functions so the polynomial layer can work on raw
triples; :class:`GaussRational` wraps a triple for the public API.

The module also carries just enough Gaussian-integer machinery (gcd,
prime factorization, divisor enumeration) to extract the Q(i) roots of a
univariate polynomial exactly.  Root finding is used by the curve
resolver to locate branch points on an exceptional line.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Triple = tuple[int, int, int]

T_ZERO: Triple = (0, 0, 1)
T_ONE: Triple = (1, 0, 1)
T_I: Triple = (0, 1, 1)


def t_make(a: int, b: int, d: int) -> Triple:
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(abs(a), abs(b)), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return (a, b, d)


def t_add(x: Triple, y: Triple) -> Triple:
    a1, b1, d1 = x
    a2, b2, d2 = y
    return t_make(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def t_sub(x: Triple, y: Triple) -> Triple:
    a1, b1, d1 = x
    a2, b2, d2 = y
    return t_make(a1 * d2 - a2 * d1, b1 * d2 - b2 * d1, d1 * d2)


def t_neg(x: Triple) -> Triple:
    return (-x[0], -x[1], x[2])


def t_mul(x: Triple, y: Triple) -> Triple:
    a1, b1, d1 = x
    a2, b2, d2 = y
    return t_make(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


def t_inv(x: Triple) -> Triple:
    a, b, d = x
    n = a * a + b * b
    if n == 0:
        raise ZeroDivisionError("inverse of zero")
    return t_make(a * d, -b * d, n)


def t_div(x: Triple, y: Triple) -> Triple:
    return t_mul(x, t_inv(y))


def t_conj(x: Triple) -> Triple:
    return (x[0], -x[1], x[2])


def t_is_zero(x: Triple) -> bool:
    return x[0] == 0 and x[1] == 0


def t_from_int(n: int) -> Triple:
    return (n, 0, 1)


def t_from_fractions(re: Fraction, im: Fraction) -> Triple:
    d = (re.denominator * im.denominator) // gcd(re.denominator, im.denominator)
    return t_make(
        re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d
    )


def t_pow(x: Triple, n: int) -> Triple:
    if n < 0:
        return t_inv(t_pow(x, -n))
    out = T_ONE
    base = x
    while n:
        if n & 1:
            out = t_mul(out, base)
        base = t_mul(base, base)
        n >>= 1
    return out


def t_str(x: Triple) -> str:
    """Canonical coefficient text: real part, imaginary part, or a
    parenthesized sum like ``(1/2+3*i)``."""
    a, b, d = x
    re = Fraction(a, d)
    im = Fraction(b, d)
    if im == 0:
        return str(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{im}*i"
    imtxt = "i" if abs(im) == 1 else f"{abs(im)}*i"
    sign = "+" if im > 0 else "-"
    return f"({re}{sign}{imtxt})"


class GaussRational:
    """An immutable element of Q(i)."""

    __slots__ = ("_t",)

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRational):
            base = re._t
        elif isinstance(re, tuple) and len(re) == 3:
            base = t_make(*re)
        elif isinstance(re, int):
            base = (re, 0, 1)
        elif isinstance(re, Fraction):
            base = t_make(re.numerator, 0, re.denominator)
        else:
            raise TypeError(f"cannot build GaussRational from {type(re).__name__}")
        if im:
            if isinstance(im, GaussRational):
                imt = im._t
            elif isinstance(im, int):
                imt = (im, 0, 1)
            elif isinstance(im, Fraction):
                imt = t_make(im.numerator, 0, im.denominator)
            else:
                raise TypeError(f"cannot build GaussRational from {type(im).__name__}")
            base = t_add(base, t_mul(T_I, imt))
        object.__setattr__(self, "_t", base)

    @classmethod
    def from_triple(cls, t: Triple) -> "GaussRational":
        out = object.__new__(cls)
        object.__setattr__(out, "_t", t_make(*t))
        return out

    @property
    def triple(self) -> Triple:
        return self._t

    @property
    def re(self) -> Fraction:
        return Fraction(self._t[0], self._t[2])

    @property
    def im(self) -> Fraction:
        return Fraction(self._t[1], self._t[2])

    def conjugate(self) -> "GaussRational":
        return GaussRational.from_triple(t_conj(self._t))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    def _coerce(self, other):
        if isinstance(other, GaussRational):
            return other._t
        if isinstance(other, int):
            return (other, 0, 1)
        if isinstance(other, Fraction):
            return t_make(other.numerator, 0, other.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.from_triple(t_add(self._t, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.from_triple(t_sub(self._t, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.from_triple(t_sub(o, self._t))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.from_triple(t_mul(self._t, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.from_triple(t_div(self._t, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational.from_triple(t_div(o, self._t))

    def __neg__(self):
        return GaussRational.from_triple(t_neg(self._t))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return GaussRational.from_triple(t_pow(self._t, n))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o

    def __hash__(self):
        if self._t[1] == 0:
            return hash(Fraction(self._t[0], self._t[2]))
        return hash(self._t)

    def __bool__(self):
        return not t_is_zero(self._t)

    def __str__(self):
        return t_str(self._t)

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"


# ---------------------------------------------------------------------------
# Gaussian integers: exact division, gcd, factorization, divisors.
# Elements are plain (a, b) int pairs meaning a + b*i.

ZI = tuple[int, int]

_UNITS: tuple[ZI, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


def zi_mul(x: ZI, y: ZI) -> ZI:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def zi_norm(x: ZI) -> int:
    return x[0] * x[0] + x[1] * x[1]


def zi_divmod(x: ZI, y: ZI) -> tuple[ZI, ZI]:
    """Rounded division making the Euclidean algorithm converge."""
    n = zi_norm(y)
    if n == 0:
        raise ZeroDivisionError("division by zero Gaussian integer")
    tr = x[0] * y[0] + x[1] * y[1]
    ti = x[1] * y[0] - x[0] * y[1]
    q = ((2 * tr + n) // (2 * n), (2 * ti + n) // (2 * n))
    r = (x[0] - (q[0] * y[0] - q[1] * y[1]), x[1] - (q[0] * y[1] + q[1] * y[0]))
    return q, r


def zi_gcd(x: ZI, y: ZI) -> ZI:
    while y != (0, 0):
        _, r = zi_divmod(x, y)
        x, y = y, r
    return x


def _sqrt_minus_one_mod(p: int) -> int:
    # p is a prime with p % 4 == 1; the norms at play are tiny, so a direct
    # scan is fine
    for k in range(2, p):
        if (k * k + 1) % p == 0:
            return k
    raise ArithmeticError(f"no square root of -1 mod {p}")


def _int_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 17
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def zi_prime_factors(z: ZI) -> list[tuple[ZI, int]]:
    """Prime factorization up to units."""
    if z == (0, 0):
        raise ValueError("cannot factor zero")
    out: list[tuple[ZI, int]] = []
    n = zi_norm(z)
    for p, _ in sorted(_int_factor(n).items()):
        if p == 2:
            pi: ZI = (1, 1)
            e = 0
            while True:
                q, r = zi_divmod(z, pi)
                if r != (0, 0):
                    break
                z = q
                e += 1
            if e:
                out.append((pi, e))
        elif p % 4 == 3:
            e = 0
            while True:
                q, r = zi_divmod(z, (p, 0))
                if r != (0, 0):
                    break
                z = q
                e += 1
            if e:
                out.append(((p, 0), e))
        else:
            k = _sqrt_minus_one_mod(p)
            pi = zi_gcd((p, 0), (k, 1))
            for cand in (pi, (pi[0], -pi[1])):
                e = 0
                while True:
                    q, r = zi_divmod(z, cand)
                    if r != (0, 0):
                        break
                    z = q
                    e += 1
                if e:
                    out.append((cand, e))
    return out


def zi_divisors(z: ZI) -> list[ZI]:
    """All divisors of z up to unit multiples (one representative each)."""
    divs: list[ZI] = [(1, 0)]
    for prime, exp in zi_prime_factors(z):
        new: list[ZI] = []
        power: ZI = (1, 0)
        for _ in range(exp + 1):
            for d in divs:
                new.append(zi_mul(d, power))
            power = zi_mul(power, prime)
        divs = new
    seen: set[ZI] = set()
    out: list[ZI] = []
    for d in divs:
        canon = min(
            (zi_mul(d, u) for u in _UNITS),
            key=lambda w: (w[0] * w[0] + w[1] * w[1], w[0], w[1]),
        )
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return out


# ---------------------------------------------------------------------------
# Q(i) roots of a univariate polynomial given as an ascending coefficient
# list of triples.


def _poly_eval(coeffs: list[Triple], r: Triple) -> Triple:
    acc = T_ZERO
    for c in reversed(coeffs):
        acc = t_add(t_mul(acc, r), c)
    return acc


def _deflate(coeffs: list[Triple], r: Triple) -> list[Triple]:
    """Divide by (u - r); assumes r is a root."""
    out: list[Triple] = [T_ZERO] * (len(coeffs) - 1)
    carry = T_ZERO
    for j in range(len(coeffs) - 1, 0, -1):
        carry = t_add(coeffs[j], t_mul(carry, r))
        out[j - 1] = carry
    return out


def qi_roots(coeffs: list[Triple]) -> tuple[list[tuple[Triple, int]], list[Triple]]:
    """Extract all Q(i) roots, with multiplicities, of the polynomial with
    the given ascending coefficients.  Returns (roots, residual) where the
    residual is the remaining factor (possibly constant) with no Q(i) root.
    """
    coeffs = list(coeffs)
    while coeffs and t_is_zero(coeffs[-1]):
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial")
    roots: list[tuple[Triple, int]] = []
    zero_mult = 0
    while t_is_zero(coeffs[0]):
        coeffs.pop(0)
        zero_mult += 1
    if zero_mult:
        roots.append((T_ZERO, zero_mult))
    if len(coeffs) == 1:
        return roots, coeffs

    # clear denominators and content
    den = 1
    for a, b, d in coeffs:
        den = den * d // gcd(den, d)
    ints = [(a * (den // d), b * (den // d)) for a, b, d in coeffs]
    content = 0
    for a, b in ints:
        content = gcd(content, gcd(abs(a), abs(b)))
    ints = [(a // content, b // content) for a, b in ints]
    coeffs = [t_make(a, b, 1) for a, b in ints]

    candidates: list[Triple] = []
    seen: set[Triple] = set()
    for num in zi_divisors(ints[0]):
        for den_ in zi_divisors(ints[-1]):
            dn = zi_norm(den_)
            base = zi_mul(num, (den_[0], -den_[1]))
            for u in _UNITS:
                v = zi_mul(base, u)
                cand = t_make(v[0], v[1], dn)
                if cand not in seen:
                    seen.add(cand)
                    candidates.append(cand)
    candidates.sort(key=lambda t: (t[2], t[0] * t[0] + t[1] * t[1], t[0], t[1]))

    for cand in candidates:
        mult = 0
        while len(coeffs) > 1 and t_is_zero(_poly_eval(coeffs, cand)):
            coeffs = _deflate(coeffs, cand)
            mult += 1
        if mult:
            roots.append((cand, mult))
        if len(coeffs) == 1:
            break
    return roots, coeffs
