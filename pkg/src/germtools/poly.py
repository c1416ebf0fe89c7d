"""Sparse multivariate polynomials over Q(i) with named, ordered variables.

Terms are stored as a map from exponent tuples to coefficient triples
(see :mod:`germtools.qi`); the canonical ordering everywhere is graded
lexicographic, earlier variables weighing more.  The printer and the
parser round-trip byte-identically, which the text formats rely on.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Union

from ._impl import terms_mul
from .qi import (
    GaussRational,
    T_I,
    T_ONE,
    T_ZERO,
    Triple,
    t_add,
    t_div,
    t_inv,
    t_is_zero,
    t_make,
    t_mul,
    t_neg,
    t_pow,
    t_str,
    t_sub,
)

MAX_EXPONENT = 2**62

Scalar = Union[int, Fraction, GaussRational]


def _to_triple(value) -> Triple:
    if isinstance(value, GaussRational):
        return value.triple
    if isinstance(value, int):
        return (value, 0, 1)
    if isinstance(value, Fraction):
        return t_make(value.numerator, 0, value.denominator)
    if isinstance(value, tuple) and len(value) == 3:
        return t_make(*value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, object] = ()):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable in {vs}")
        clean: dict[tuple, Triple] = {}
        for exps, coeff in dict(terms).items():
            e = tuple(int(x) for x in exps)
            if len(e) != len(vs):
                raise ValueError(f"exponent tuple {e} does not match variables {vs}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            if any(x > MAX_EXPONENT for x in e):
                raise OverflowError(f"exponent beyond machine bound in {e}")
            c = _to_triple(coeff)
            if not t_is_zero(c):
                prev = clean.get(e)
                c = t_add(prev, c) if prev is not None else c
                if t_is_zero(c):
                    del clean[e]
                else:
                    clean[e] = c
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "MultiPoly":
        out = object.__new__(cls)
        object.__setattr__(out, "variables", variables)
        object.__setattr__(out, "terms", terms)
        return out

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "MultiPoly":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, value, variables: Iterable[str]) -> "MultiPoly":
        vs = tuple(variables)
        c = _to_triple(value)
        if t_is_zero(c):
            return cls._raw(vs, {})
        return cls._raw(vs, {(0,) * len(vs): c})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str]) -> "MultiPoly":
        vs = tuple(variables)
        if name not in vs:
            raise ValueError(f"{name!r} is not among variables {vs}")
        e = tuple(1 if v == name else 0 for v in vs)
        return cls._raw(vs, {e: T_ONE})

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> GaussRational:
        if self.is_zero():
            return GaussRational(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return GaussRational.from_triple(next(iter(self.terms.values())))

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def local_order(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no vanishing order")
        return min(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        idx = self.variables.index(var)
        return max((e[idx] for e in self.terms), default=0)

    def coefficient(self, exps: tuple) -> GaussRational:
        return GaussRational.from_triple(self.terms.get(tuple(exps), T_ZERO))

    def leading_term(self) -> tuple[tuple, GaussRational]:
        """Largest term in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, GaussRational.from_triple(self.terms[e])

    def trailing_term(self) -> tuple[tuple, GaussRational]:
        """Smallest term in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no trailing term")
        e = min(self.terms, key=_grlex_key)
        return e, GaussRational.from_triple(self.terms[e])

    def sorted_terms(self) -> list[tuple[tuple, Triple]]:
        return [
            (e, self.terms[e])
            for e in sorted(self.terms, key=_grlex_key, reverse=True)
        ]

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, GaussRational)):
            return MultiPoly.constant(other, self.variables)
        return None

    @staticmethod
    def _align(f: "MultiPoly", g: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        if f.variables == g.variables:
            return f, g
        merged = list(f.variables) + [v for v in g.variables if v not in f.variables]
        return f.with_variables(merged), g.with_variables(merged)

    def with_variables(self, variables: Iterable[str]) -> "MultiPoly":
        """Re-embed into a (super)set of variables, preserving names."""
        vs = tuple(variables)
        pos = []
        for i, v in enumerate(self.variables):
            if v not in vs:
                if any(e[i] for e in self.terms):
                    raise ValueError(f"variable {v!r} is used but missing from {vs}")
                pos.append(None)
            else:
                pos.append(vs.index(v))
        terms: dict[tuple, Triple] = {}
        for e, c in self.terms.items():
            new = [0] * len(vs)
            for i, p in enumerate(pos):
                if p is not None:
                    new[p] = e[i]
            terms[tuple(new)] = c
        return MultiPoly._raw(vs, terms)

    def rename_variables(self, mapping: Mapping[str, str]) -> "MultiPoly":
        vs = tuple(mapping.get(v, v) for v in self.variables)
        if len(set(vs)) != len(vs):
            raise ValueError("renaming collides variable names")
        return MultiPoly._raw(vs, dict(self.terms))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f, g = MultiPoly._align(self, o)
        terms = dict(f.terms)
        for e, c in g.terms.items():
            cur = terms.get(e)
            s = t_add(cur, c) if cur is not None else c
            if t_is_zero(s):
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPoly._raw(f.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(
            self.variables, {e: t_neg(c) for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            c = _to_triple(other)
            if t_is_zero(c):
                return MultiPoly.zero(self.variables)
            return MultiPoly._raw(
                self.variables, {e: t_mul(v, c) for e, v in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        f, g = MultiPoly._align(self, other)
        return MultiPoly._raw(f.variables, terms_mul(f.terms, g.terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            c = _to_triple(other)
            return self * GaussRational.from_triple(t_inv(c))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative power of a polynomial")
        if n > MAX_EXPONENT:
            raise OverflowError("exponent beyond machine bound")
        out = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f, g = MultiPoly._align(self, o)
        return f.terms == g.terms

    def __hash__(self):
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus-flavoured operations --------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        idx = self.variables.index(var)
        terms: dict[tuple, Triple] = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k == 0:
                continue
            new = e[:idx] + (k - 1,) + e[idx + 1 :]
            add = t_mul(c, (k, 0, 1))
            cur = terms.get(new)
            s = t_add(cur, add) if cur is not None else add
            if t_is_zero(s):
                terms.pop(new, None)
            else:
                terms[new] = s
        return MultiPoly._raw(self.variables, terms)

    def substitute(self, bindings: Mapping[str, object]) -> "MultiPoly":
        """Composite with the given variable bindings.

        Unbound variables survive as themselves; the resulting variable
        tuple lists surviving variables first, then new variables in the
        order the binding values introduce them.
        """
        binds: dict[str, MultiPoly] = {}
        out_vars = [v for v in self.variables if v not in bindings]
        for v in self.variables:
            if v in bindings:
                value = bindings[v]
                if isinstance(value, MultiPoly):
                    b = value
                else:
                    b = None
                if b is None:
                    binds[v] = MultiPoly.constant(_to_triple_value(value), out_vars)
                else:
                    for w in b.variables:
                        if w not in out_vars:
                            out_vars.append(w)
                    binds[v] = b
        for v in binds:
            binds[v] = binds[v].with_variables(out_vars)
        acc = MultiPoly.zero(out_vars)
        cache: dict[tuple[str, int], MultiPoly] = {}

        def power(v: str, n: int) -> MultiPoly:
            key = (v, n)
            got = cache.get(key)
            if got is None:
                base = binds[v] if v in binds else MultiPoly.variable(v, out_vars)
                got = base**n
                cache[key] = got
            return got

        for e, c in self.terms.items():
            piece = MultiPoly.constant(GaussRational.from_triple(c), out_vars)
            for v, k in zip(self.variables, e):
                if k:
                    piece = piece * power(v, k)
            acc = acc + piece
        return acc

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.variables, e)
                if k
            )
            a, b, d = c
            if not mono:
                text = t_str(c)
            elif (a, b, d) == (1, 0, 1):
                text = mono
            elif (a, b, d) == (-1, 0, 1):
                text = f"-{mono}"
            else:
                text = f"{t_str(c)}*{mono}"
            pieces.append(text)
        out = pieces[0]
        for text in pieces[1:]:
            if text.startswith("-"):
                out += f" - {text[1:]}"
            else:
                out += f" + {text}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {str(self)!r})"


def _to_triple_value(value) -> GaussRational:
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussRational(value)
    raise TypeError(f"cannot substitute a {type(value).__name__}")


# ---------------------------------------------------------------------------
# parsing


class PolyParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, object]]:
    tokens: list[tuple[str, object]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r} at position {i}")
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.pos = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise PolyParseError(f"expected {kind!r}, found {tok[1]!r}")
        return tok

    def parse_sum(self) -> MultiPoly:
        acc = self.parse_product()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.parse_product()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def parse_product(self) -> MultiPoly:
        acc = self.parse_factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                acc = acc * self.parse_factor()
            elif kind == "/":
                self.take()
                rhs = self.parse_factor()
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolyParseError("division only by nonzero constants")
                acc = acc * (GaussRational(1) / rhs.constant_value())
            elif kind in ("int", "name", "("):
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> MultiPoly:
        if self.peek()[0] == "-":
            self.take()
            return -self.parse_factor()
        if self.peek()[0] == "+":
            self.take()
            return self.parse_factor()
        base = self.parse_atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("int")
            if tok[1] > MAX_EXPONENT:
                raise PolyParseError("exponent beyond machine bound")
            return base ** tok[1]
        return base

    def parse_atom(self) -> MultiPoly:
        kind, value = self.take()
        if kind == "int":
            return MultiPoly.constant(value, self.variables)
        if kind == "name":
            if value == "i":
                return MultiPoly.constant(GaussRational(0, 1), self.variables)
            if value not in self.variables:
                raise PolyParseError(
                    f"unknown variable {value!r}; expected one of {list(self.variables)}"
                )
            return MultiPoly.variable(value, self.variables)
        if kind == "(":
            inner = self.parse_sum()
            self.expect(")")
            return inner
        raise PolyParseError(f"unexpected token {value!r}")


def poly_parse(text: str, variables: Iterable[str]) -> MultiPoly:
    """Parse polynomial text over the given ordered variables.

    Coefficients are integers, fractions like ``3/4``, and the imaginary
    unit ``i``; operators are ``+ - * / ^`` with implicit multiplication
    allowed (``2s t^2``).
    """
    parser = _Parser(_tokenize(text), variables)
    out = parser.parse_sum()
    parser.expect("end")
    return out.with_variables(tuple(variables))


# ---------------------------------------------------------------------------
# division, gcd, resultant


def exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact polynomial division; raises ValueError when g does not divide f."""
    f, g = MultiPoly._align(f, g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return MultiPoly.zero(f.variables)
    ge, gc = g.leading_term()
    ginv = t_inv(gc.triple)
    quot: dict[tuple, Triple] = {}
    rem = dict(f.terms)
    while rem:
        e = max(rem, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(e, ge))
        if any(x < 0 for x in diff):
            raise ValueError("polynomials do not divide exactly")
        c = t_mul(rem[e], ginv)
        quot[diff] = c
        for eg, cg in g.terms.items():
            key = tuple(a + b for a, b in zip(diff, eg))
            cur = rem.get(key)
            s = t_sub(cur if cur is not None else T_ZERO, t_mul(c, cg))
            if t_is_zero(s):
                rem.pop(key, None)
            else:
                rem[key] = s
    return MultiPoly._raw(f.variables, quot)


def divides(g: MultiPoly, f: MultiPoly) -> bool:
    try:
        exact_div(f, g)
        return True
    except ValueError:
        return False


def unit_normalize(f: MultiPoly) -> MultiPoly:
    """Scale so the trailing (lowest graded-lex) term has coefficient 1."""
    if f.is_zero():
        return f
    _, c = f.trailing_term()
    return f * (GaussRational(1) / c)


def equal_up_to_unit(f: MultiPoly, g: MultiPoly) -> bool:
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    fa, ga = MultiPoly._align(f, g)
    return unit_normalize(fa).terms == unit_normalize(ga).terms


def divided_difference(f: MultiPoly, var: str) -> MultiPoly:
    """The exact quotient (f - f|_{var -> var'}) / (var - var').

    The primed variable is appended to the variable tuple.
    """
    primed = var + "'"
    if primed in f.variables:
        raise ValueError(f"variable {primed!r} already present")
    idx = f.variables.index(var)
    vs = f.variables + (primed,)
    terms: dict[tuple, Triple] = {}
    for e, c in f.terms.items():
        m = e[idx]
        for j in range(m):
            new = e[:idx] + (j,) + e[idx + 1 :] + (m - 1 - j,)
            cur = terms.get(new)
            s = t_add(cur, c) if cur is not None else c
            if t_is_zero(s):
                terms.pop(new, None)
            else:
                terms[new] = s
    return MultiPoly._raw(vs, terms)


def _used_variables(f: MultiPoly, g: MultiPoly) -> list[str]:
    used = []
    for i, v in enumerate(f.variables):
        if any(e[i] for e in f.terms) or any(e[i] for e in g.terms):
            used.append(v)
    return used


def _coeffs_in(f: MultiPoly, var: str) -> list[MultiPoly]:
    """Coefficient polynomials of f seen univariately in var (var slot zeroed)."""
    idx = f.variables.index(var)
    deg = f.degree_in(var)
    buckets: list[dict] = [dict() for _ in range(deg + 1)]
    for e, c in f.terms.items():
        rest = e[:idx] + (0,) + e[idx + 1 :]
        bucket = buckets[e[idx]]
        cur = bucket.get(rest)
        s = t_add(cur, c) if cur is not None else c
        if t_is_zero(s):
            bucket.pop(rest, None)
        else:
            bucket[rest] = s
    return [MultiPoly._raw(f.variables, b) for b in buckets]


def _from_coeffs(coeffs: list[MultiPoly], var: str, variables: tuple) -> MultiPoly:
    idx = variables.index(var)
    terms: dict[tuple, Triple] = {}
    for k, poly in enumerate(coeffs):
        for e, c in poly.terms.items():
            new = e[:idx] + (e[idx] + k,) + e[idx + 1 :]
            cur = terms.get(new)
            s = t_add(cur, c) if cur is not None else c
            if t_is_zero(s):
                terms.pop(new, None)
            else:
                terms[new] = s
    return MultiPoly._raw(variables, terms)


def _pseudo_rem(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    df = f.degree_in(var)
    dg = g.degree_in(var)
    if dg == 0:
        raise ValueError("pseudo remainder needs positive degree divisor")
    fc = _coeffs_in(f, var)
    gc = _coeffs_in(g, var)
    lead = gc[-1]
    while len(fc) - 1 >= dg and any(not c.is_zero() for c in fc):
        while fc and fc[-1].is_zero():
            fc.pop()
        if len(fc) - 1 < dg:
            break
        top = fc[-1]
        shift = len(fc) - 1 - dg
        fc = [c * lead for c in fc]
        for k, c in enumerate(gc):
            fc[k + shift] = fc[k + shift] - top * c
        while fc and fc[-1].is_zero():
            fc.pop()
    if not fc:
        return MultiPoly.zero(f.variables)
    return _from_coeffs(fc, var, f.variables)


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Multivariate gcd; result normalized so the trailing coefficient is 1."""
    f, g = MultiPoly._align(f, g)
    if f.is_zero():
        return unit_normalize(g)
    if g.is_zero():
        return unit_normalize(f)
    used = _used_variables(f, g)
    if not used:
        return MultiPoly.constant(1, f.variables)
    var = used[0]
    if len(used) == 1:
        a, b = f, g
        while not b.is_zero():
            a, b = b, _pseudo_rem(a, b, var) if b.degree_in(var) > 0 else MultiPoly.zero(f.variables)
            if not b.is_zero() and b.degree_in(var) == 0:
                return MultiPoly.constant(1, f.variables)
        if a.degree_in(var) == 0:
            return MultiPoly.constant(1, f.variables)
        return unit_normalize(a)

    def content_and_primitive(p: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
        coeffs = [c for c in _coeffs_in(p, var) if not c.is_zero()]
        cont = coeffs[0]
        for c in coeffs[1:]:
            cont = poly_gcd(cont, c)
            if cont.is_constant():
                break
        cont = unit_normalize(cont)
        return cont, exact_div(p, cont)

    if f.degree_in(var) == 0:
        cont_g, _ = content_and_primitive(g)
        return unit_normalize(poly_gcd(f, cont_g))
    if g.degree_in(var) == 0:
        cont_f, _ = content_and_primitive(f)
        return unit_normalize(poly_gcd(cont_f, g))

    cont_f, pp_f = content_and_primitive(f)
    cont_g, pp_g = content_and_primitive(g)
    cont = poly_gcd(cont_f, cont_g)
    a, b = pp_f, pp_g
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while not b.is_zero() and b.degree_in(var) > 0:
        r = _pseudo_rem(a, b, var)
        if not r.is_zero() and not r.is_constant():
            _, r = content_and_primitive(r)
        a, b = b, r
    if b.is_zero():
        _, pp = content_and_primitive(a)
        return unit_normalize(cont * pp)
    return unit_normalize(cont)


def is_squarefree(f: MultiPoly) -> bool:
    if f.is_zero():
        return False
    if f.is_constant():
        return True
    g = f
    for i, v in enumerate(f.variables):
        if any(e[i] for e in f.terms):
            g = poly_gcd(g, f.derivative(v))
            if g.is_constant():
                return True
    return g.is_constant()


def univariate_resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant eliminating var, computed from the Sylvester matrix by
    fraction-free elimination."""
    f, g = MultiPoly._align(f, g)
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if f.degree_in(var) == 0 or g.degree_in(var) == 0:
        raise ValueError(f"resultant needs positive degree in {var!r} on both sides")
    fc = _coeffs_in(f, var)
    gc = _coeffs_in(g, var)
    m = len(fc) - 1
    n = len(gc) - 1
    size = m + n
    zero = MultiPoly.zero(f.variables)
    rows: list[list[MultiPoly]] = []
    for i in range(n):
        row = [zero] * size
        for j, cell in enumerate(reversed(fc)):
            row[i + j] = cell
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, cell in enumerate(reversed(gc)):
            row[i + j] = cell
        rows.append(row)
    return _bareiss_det(rows)


def _bareiss_det(rows: list[list[MultiPoly]]) -> MultiPoly:
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    variables = rows[0][0].variables
    one = MultiPoly.constant(1, variables)
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = None
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    swap = r
                    break
            if swap is None:
                return MultiPoly.zero(variables)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
            m[i][k] = MultiPoly.zero(variables)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def local_order(f: MultiPoly) -> int:
    return f.local_order()


def substitute(f: MultiPoly, bindings: Mapping[str, object]) -> MultiPoly:
    return f.substitute(bindings)


# ---------------------------------------------------------------------------
# matrices of polynomials


class PolyMatrix:
    """A rectangular matrix of MultiPoly entries over one variable tuple."""

    __slots__ = ("rows", "variables")

    def __init__(self, rows: Iterable[Iterable[MultiPoly]]):
        mat = [list(r) for r in rows]
        if not mat or not mat[0]:
            raise ValueError("matrix needs at least one entry")
        width = len(mat[0])
        if any(len(r) != width for r in mat):
            raise ValueError("ragged matrix")
        variables = mat[0][0].variables
        fixed = []
        for r in mat:
            row = []
            for cell in r:
                if cell.variables != variables:
                    cell = cell.with_variables(variables)
                row.append(cell)
            fixed.append(tuple(row))
        object.__setattr__(self, "rows", tuple(fixed))
        object.__setattr__(self, "variables", variables)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]))

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.rows[i][j]

    def det(self) -> MultiPoly:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det([list(r) for r in self.rows])

    def minors(self, size: int) -> list[MultiPoly]:
        """All size x size minors, rows and columns in increasing order."""
        n, m = self.shape
        if size <= 0 or size > n or size > m:
            raise ValueError(f"no {size} x {size} minors in a {n} x {m} matrix")
        out = []
        for rsel in combinations(range(n), size):
            for csel in combinations(range(m), size):
                sub = [[self.rows[i][j] for j in csel] for i in rsel]
                out.append(_bareiss_det(sub))
        return out

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __str__(self):
        return "[" + "; ".join(", ".join(str(c) for c in r) for r in self.rows) + "]"
