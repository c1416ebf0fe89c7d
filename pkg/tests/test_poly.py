"""Polynomial layer: parsing, printing, ring operations, gcd, resultants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from germtools.poly import (
    MultiPoly,
    PolyMatrix,
    PolyParseError,
    divided_difference,
    equal_up_to_unit,
    exact_div,
    is_squarefree,
    poly_gcd,
    poly_parse,
    unit_normalize,
    univariate_resultant,
)
from germtools.qi import GaussRational

XY = ("x", "y")
ST = ("s", "t")


def P(text, variables=XY):
    return poly_parse(text, variables)


# -- parsing and printing ----------------------------------------------------


def test_parse_basic_forms():
    assert str(P("x^2*y - z^2", ("x", "y", "z"))) == "x^2*y - z^2"
    assert str(P("s*t + t^5", ST)) == "t^5 + s*t"
    assert str(P("(y+i*x)*(y-i*x)")) == "x^2 + y^2"


def test_parse_print_fixed_point():
    samples = [
        "x^2*y - z^2",
        "t^5 + s*t",
        "x^2 + y^2",
        "-x + 1/2",
        "(1+i)*x - i",
        "3*x^4 - 2*x^2*y^2 + y^4 - x^3",
        "i*x*y",
        "2/3",
        "0",
    ]
    for text in samples:
        if "z" in text:
            vs: tuple = ("x", "y", "z")
        elif "s" in text or "t" in text:
            vs = ST
        else:
            vs = XY
        once = poly_parse(text, vs)
        twice = poly_parse(str(once), vs)
        assert str(twice) == str(once)
        assert twice == once


def test_parse_implicit_multiplication():
    assert P("2x y") == P("2*x*y")
    assert P("x(x+y)") == P("x^2 + x*y")
    assert P("(x+y)(x-y)") == P("x^2 - y^2")


def test_parse_rational_coefficients():
    f = P("1/2*x + 3/4")
    assert f.coefficient((1, 0)) == GaussRational(Fraction(1, 2))
    assert f.coefficient((0, 0)) == GaussRational(Fraction(3, 4))


def test_parse_errors():
    with pytest.raises(PolyParseError):
        P("x + w")
    with pytest.raises(PolyParseError):
        P("x +")
    with pytest.raises(PolyParseError):
        P("x ^ y")
    with pytest.raises(PolyParseError):
        P("x / y")
    with pytest.raises(PolyParseError):
        P("x $ y")


def test_printer_term_order():
    # graded-lex descending, earlier variables weigh more
    f = P("y^3 + x*y + x^2 + y + 1")
    assert str(f) == "y^3 + x^2 + x*y + y + 1"


def test_canonical_equality():
    assert P("x + y - x") == P("y")
    assert P("x - x") == MultiPoly.zero(XY)
    assert str(P("0")) == "0"


# -- ring axioms on random polynomials ----------------------------------------

coeffs = st.integers(min_value=-6, max_value=6)
exps = st.tuples(st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(exps, coeffs, min_size=0, max_size=6).map(
    lambda d: MultiPoly(XY, {k: v for k, v in d.items()})
)


@settings(max_examples=250, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f + (-f) == MultiPoly.zero(XY)


@settings(max_examples=200, deadline=None)
@given(polys)
def test_divided_difference_reconstructs(f):
    q = divided_difference(f, "y")
    primed = f.substitute({"y": MultiPoly.variable("y'", ("y'",))})
    delta = MultiPoly.variable("y", XY) - MultiPoly.variable("y'", ("y'",))
    assert q * delta + primed == f.with_variables(q.variables)


def test_divided_difference_examples():
    assert str(divided_difference(P("t^2", ST), "t")) == "t + t'"
    assert str(divided_difference(P("s*t", ST), "t")) == "s"
    assert str(divided_difference(P("t^3", ST), "t")) == "t^2 + t*t' + t'^2"


# -- substitution --------------------------------------------------------------


def test_substitute_chart_map():
    f = P("x*y")
    out = f.substitute({"x": poly_parse("s", ST), "y": poly_parse("s*t", ST)})
    assert str(out) == "s^2*t"


def test_substitute_involution_invariance():
    f = poly_parse("t^2 + s^3", ST)
    assert f.substitute({"t": -MultiPoly.variable("t", ST)}) == f
    g = poly_parse("s^2 + t^6", ST)
    assert g.substitute({"t": -MultiPoly.variable("t", ST)}) == g


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_substitute_is_homomorphism(f, g):
    binding = {"x": poly_parse("s + t", ST), "y": poly_parse("s*t - t", ST)}
    assert (f * g).substitute(binding) == f.substitute(binding) * g.substitute(binding)
    assert (f + g).substitute(binding) == f.substitute(binding) + g.substitute(binding)


# -- division, gcd, squarefree ---------------------------------------------------


def test_exact_div():
    assert str(exact_div(P("x^2 - y^2"), P("x + y"))) == "x - y"
    with pytest.raises(ValueError):
        exact_div(P("x^2 + y"), P("x + y"))


def test_unit_normalize():
    f = unit_normalize(P("-2*y + 4*x^2"))
    assert str(f) == "-2*x^2 + y"
    assert equal_up_to_unit(P("i*x + i*y"), P("x + y"))
    assert not equal_up_to_unit(P("x"), P("y"))


def test_poly_gcd():
    g = poly_gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2"))
    assert equal_up_to_unit(g, P("x + y"))
    g = poly_gcd(P("(y^2 - x^3)*(y + x)"), P("(y^2 - x^3)*(y - x)"))
    assert equal_up_to_unit(g, P("y^2 - x^3"))
    g = poly_gcd(P("x^2"), P("y^3"))
    assert g.is_constant()


def test_gcd_over_gaussian_coefficients():
    f = P("(y + i*x)*(y - i*x^2)")
    g = P("(y + i*x)*(y + x)")
    assert equal_up_to_unit(poly_gcd(f, g), P("y + i*x"))


def test_is_squarefree():
    assert is_squarefree(P("x*y*(x + y)"))
    assert is_squarefree(P("y^2 - x^3"))
    assert is_squarefree(P("y^2 - x*y"))
    assert not is_squarefree(P("x^2*y"))
    assert not is_squarefree(P("(y^2 - x^3)^2"))


# -- resultants -------------------------------------------------------------------


def test_resultant_examples():
    assert str(univariate_resultant(P("t", ST), P("3*t^2 + s^2", ST), "t")) == "s^2"
    assert str(univariate_resultant(P("t - s", ST), P("t + s", ST), "t")) == "2*s"
    assert str(univariate_resultant(P("t^2 + s^3", ST), P("t", ST), "t")) == "s^3"


def test_resultant_rejects_degenerate():
    with pytest.raises(ValueError):
        univariate_resultant(P("s", ST), P("t", ST), "t")
    with pytest.raises(ValueError):
        univariate_resultant(MultiPoly.zero(ST), P("t", ST), "t")


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_resultant_multiplicative(f, g, h):
    y = MultiPoly.variable("y", XY)
    f = f + y ** 5
    g = g + y ** 4
    h = h + y ** 3
    lhs = univariate_resultant(f * g, h, "y")
    rhs = univariate_resultant(f, h, "y") * univariate_resultant(g, h, "y")
    assert lhs == rhs


# -- matrices ----------------------------------------------------------------------


def test_matrix_det_and_minors():
    m = PolyMatrix([[P("x"), P("y")], [P("y"), P("x")]])
    assert str(m.det()) == "x^2 - y^2"
    assert [str(q) for q in m.minors(1)] == ["x", "y", "y", "x"]
    assert [str(q) for q in m.minors(2)] == ["x^2 - y^2"]


def test_matrix_det_matches_cofactor_expansion():
    entries = [
        [P("x"), P("y"), P("1")],
        [P("y"), P("x"), P("x*y")],
        [P("0"), P("x + y"), P("x")],
    ]
    m = PolyMatrix(entries)
    a, b, c = entries[0]
    d, e, f = entries[1]
    g, h, k = entries[2]
    cof = a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)
    assert m.det() == cof


def test_local_order_and_degrees():
    assert P("x^2*y - z^2", ("x", "y", "z")).local_order() == 2
    assert P("s", ST).local_order() == 1
    assert P("3 + x").local_order() == 0
    with pytest.raises(ValueError):
        MultiPoly.zero(XY).local_order()
