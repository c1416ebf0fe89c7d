"""Dimensions of local quotient rings at the origin.

The engine behind every codimension in the package: truncated-jet linear
algebra over Q(i).  Products monomial * generator are truncated at an
escalating degree M; once the truncation certifies that every monomial
of degree M lies in the ideal (so the ideal contains a power of the
maximal ideal), the quotient dimension below M is exact and final.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

from ._impl import row_reduce, vec_reduces_to_zero
from .poly import MultiPoly, poly_gcd, unit_normalize, univariate_resultant
from .qi import T_ONE, Triple

DEFAULT_DEGREE_CAP = 256


class Infinite:
    """Marker for an infinite-dimensional quotient."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = Infinite()


@dataclass(frozen=True)
class Undecided:
    """No m-primary certificate below the cap and no infiniteness witness."""

    cap: int

    def __repr__(self):
        return f"UNDECIDED(cap={self.cap})"


class UndecidedError(RuntimeError):
    """Raised where a definite answer is required but the cap ran out."""

    def __init__(self, cap: int):
        super().__init__(
            f"no certificate below degree cap {cap}; retry with a larger cap"
        )
        self.cap = cap


CodimResult = Union[int, Infinite, Undecided]


class LocalIdeal:
    """An ideal of the local ring at the origin of 2- or 3-space."""

    __slots__ = ("variables", "generators")

    def __init__(self, variables: Iterable[str], generators: Iterable[MultiPoly]):
        vs = tuple(variables)
        if len(vs) not in (2, 3, 4):
            raise ValueError("local ideals live in 2, 3, or 4 variables")
        gens_in = list(generators)
        if not gens_in:
            raise ValueError("empty generator list")
        seen: dict = {}
        gens: list[MultiPoly] = []
        for g in gens_in:
            g = g.with_variables(vs)
            if g.is_zero():
                continue
            if g.coefficient((0,) * len(vs)):
                raise ValueError(f"generator {g} does not vanish at the origin")
            key = tuple(sorted(unit_normalize(g).terms.items()))
            if key not in seen:
                seen[key] = True
                gens.append(g)
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "generators", tuple(gens))

    def __setattr__(self, name, value):
        raise AttributeError("LocalIdeal is immutable")

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.generators)
        return f"LocalIdeal({self.variables!r}, ({inner}))"


# ---------------------------------------------------------------------------
# infiniteness witnesses


def _gcd_witness(ideal: LocalIdeal) -> bool:
    """True when all generators share a factor vanishing at the origin."""
    if not ideal.generators:
        return True
    g = reduce(poly_gcd, ideal.generators)
    if g.is_constant():
        return False
    origin = (0,) * len(ideal.variables)
    return not g.coefficient(origin)


def _axis_witness(ideal: LocalIdeal) -> bool:
    """True when a coordinate axis lies inside the zero set."""
    nv = len(ideal.variables)
    for keep in range(nv):
        binding = {
            v: MultiPoly.zero((ideal.variables[keep],))
            for j, v in enumerate(ideal.variables)
            if j != keep
        }
        if all(g.substitute(binding).is_zero() for g in ideal.generators):
            return True
    return False


# ---------------------------------------------------------------------------
# the jet-truncation engine


def _monomials(nv: int, degree: int):
    if nv == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in _monomials(nv - 1, degree - first):
            yield (first,) + rest


def _column_index(nv: int, top: int) -> tuple[dict, int]:
    """Map exponent tuple -> column id, graded ascending; returns the map and
    the number of columns strictly below the top degree."""
    index: dict[tuple, int] = {}
    below = 0
    for d in range(top + 1):
        for m in _monomials(nv, d):
            index[m] = len(index)
        if d < top:
            below = len(index)
    return index, below


def _codim_at(ideal: LocalIdeal, top: int) -> tuple[int, bool, dict, dict]:
    """Quotient dimension below degree ``top``, whether the m-primary
    certificate holds there, and the pivot/column data for reuse."""
    nv = len(ideal.variables)
    index, n_below = _column_index(nv, top)
    rows: list[dict[int, Triple]] = []
    for gen in ideal.generators:
        terms = list(gen.terms.items())
        order = gen.local_order()
        for d in range(top - order + 1):
            for mono in _monomials(nv, d):
                row: dict[int, Triple] = {}
                for e, c in terms:
                    shifted = tuple(a + b for a, b in zip(e, mono))
                    if sum(shifted) <= top:
                        row[index[shifted]] = c
                if row:
                    rows.append(row)
    pivots = row_reduce(rows)
    certified = all(
        vec_reduces_to_zero({index[m]: T_ONE}, pivots)
        for m in _monomials(nv, top)
    )
    n_pivots_below = sum(1 for c in pivots if c < n_below)
    return n_below - n_pivots_below, certified, pivots, index


def quotient_codim(ideal: LocalIdeal, degree_cap: int = DEFAULT_DEGREE_CAP) -> CodimResult:
    """Dimension of the local quotient ring by the ideal.

    Returns the exact dimension when a truncation degree M <= degree_cap
    certifies that the ideal contains all monomials of degree M; INFINITE
    when a witness shows the zero set contains a curve through the origin;
    otherwise UNDECIDED at the cap.
    """
    if not ideal.generators:
        return INFINITE
    if _gcd_witness(ideal) or _axis_witness(ideal):
        return INFINITE
    start = max(2, 2 * max(g.total_degree() for g in ideal.generators))
    top = min(start, degree_cap)
    while True:
        dim, certified, _, _ = _codim_at(ideal, top)
        if certified:
            return dim
        if top >= degree_cap:
            return Undecided(degree_cap)
        top = min(2 * top, degree_cap)


def ideal_contains(
    ideal: LocalIdeal, f: MultiPoly, degree_cap: int = DEFAULT_DEGREE_CAP
) -> bool:
    """Membership test for ideals that contain a power of the maximal
    ideal: once truncation degree M is certified, membership below M plus
    automatic membership of everything at degree M and above decide it."""
    f = f.with_variables(ideal.variables)
    if f.is_zero():
        return True
    if not ideal.generators:
        return False
    start = max(2, 2 * max(g.total_degree() for g in ideal.generators))
    start = max(start, f.total_degree())
    top = min(start, degree_cap)
    while True:
        _, certified, pivots, index = _codim_at(ideal, top)
        if certified:
            vec = {index[e]: c for e, c in f.terms.items() if sum(e) <= top}
            return vec_reduces_to_zero(vec, pivots)
        if top >= degree_cap:
            raise UndecidedError(degree_cap)
        top = min(2 * top, degree_cap)


# ---------------------------------------------------------------------------
# intersection multiplicity of plane-curve germs

_SHEAR_SEEDS = (
    (0, 0),
    (1, 0),
    (0, 1),
    (2, 0),
    (3, 0),
    (2, 1),
    (3, 2),
    (5, 0),
    (7, 0),
    (1, 2),
)


def _resultant_order(f: MultiPoly, g: MultiPoly) -> int | None:
    """Smallest origin-order of the x-resultant over seeded shears, or None
    when no seed yields a usable projection."""
    xv, yv = f.variables
    x = MultiPoly.variable(xv, f.variables)
    y = MultiPoly.variable(yv, f.variables)
    best: int | None = None
    for a, b in _SHEAR_SEEDS:
        if a * b == 1:
            continue
        binding = {xv: x + a * y, yv: b * x + y}
        fs = f.substitute(binding).with_variables(f.variables)
        gs = g.substitute(binding).with_variables(f.variables)
        if fs.degree_in(yv) == 0 or gs.degree_in(yv) == 0:
            continue
        r = univariate_resultant(fs, gs, yv)
        if r.is_zero():
            continue
        order = r.local_order()
        if best is None or order < best:
            best = order
    return best


def intersection_multiplicity(
    f: MultiPoly, g: MultiPoly, degree_cap: int = DEFAULT_DEGREE_CAP
) -> Union[int, Infinite]:
    """Intersection multiplicity at the origin of two plane-curve germs.

    INFINITE when the curves share a component through the origin.  Finite
    values are computed by the jet engine and cross-checked against the
    vanishing order of a resultant after a generic shear; disagreement is
    a hard error.
    """
    if len(f.variables) != 2 or f.variables != g.variables:
        raise ValueError("intersection multiplicity needs two plane germs")
    ideal = LocalIdeal(f.variables, [f, g])
    result = quotient_codim(ideal, degree_cap)
    if isinstance(result, Undecided):
        raise UndecidedError(result.cap)
    if result is INFINITE:
        return INFINITE
    check = _resultant_order(f, g)
    if check is not None and check != result:
        raise ArithmeticError(
            f"jet dimension {result} disagrees with resultant order {check}"
        )
    return result


def milnor_number(
    d: MultiPoly, degree_cap: int = DEFAULT_DEGREE_CAP
) -> Union[int, Infinite]:
    """Milnor number of a plane-curve germ: codimension of the ideal of the
    two partial derivatives."""
    if len(d.variables) != 2:
        raise ValueError("Milnor numbers here are for plane germs")
    if d.is_zero():
        return INFINITE
    origin = (0, 0)
    if d.coefficient(origin):
        raise ValueError("germ must vanish at the origin")
    partials = [d.derivative(v) for v in d.variables]
    for p in partials:
        if not p.is_zero() and p.coefficient(origin):
            return 0
    live = [p for p in partials if not p.is_zero()]
    if not live:
        return INFINITE
    ideal = LocalIdeal(d.variables, live)
    result = quotient_codim(ideal, degree_cap)
    if isinstance(result, Undecided):
        raise UndecidedError(result.cap)
    return result
