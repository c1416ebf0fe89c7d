"""Frozen expected values, produced by the independent oracles.

These constants were derived once (by hand plus the oracle implementations
in oracles.py) and are pinned here.  The package tests assert the package
reproduces the same values; this file asserts the oracles still do.
"""

from __future__ import annotations

from fractions import Fraction

from oracles import (
    chain_det,
    double_curve_corank1,
    intersection_order,
    mono,
    p_add,
    p_eq_up_to_unit,
    staircase_codim,
)


def P(*terms):
    """Build a polynomial dict from (exps, re[, im]) tuples."""
    out: dict = {}
    for term in terms:
        exps, re = term[0], term[1]
        im = term[2] if len(term) > 2 else 0
        out = p_add(out, mono(exps, re, im))
    return out


# --- intersection multiplicities (2 variables, germ at the origin) --------

FROZEN_INTERSECTIONS = [
    # (f, g, expected)
    (P(((0, 2), 1), ((3, 0), 1)), P(((0, 2), 1), ((3, 0), -1)), 6),
    # a coordinate line against a smooth branch tangent to the other axis
    (P(((1, 0), 1)), P(((0, 1), 1), ((1, 0), 0, 1)), 1),
    (P(((1, 0), 1)), P(((0, 1), 1), ((2, 0), 0, 1)), 1),
    (P(((1, 0), 1)), P(((0, 1), 1), ((3, 0), 0, 1)), 1),
    # conjugate smooth pairs y +- i*x^n meet with multiplicity n
    (P(((0, 1), 1), ((1, 0), 0, 1)), P(((0, 1), 1), ((1, 0), 0, -1)), 1),
    (P(((0, 1), 1), ((2, 0), 0, 1)), P(((0, 1), 1), ((2, 0), 0, -1)), 2),
    (P(((0, 1), 1), ((3, 0), 0, 1)), P(((0, 1), 1), ((3, 0), 0, -1)), 3),
    (P(((0, 1), 1), ((4, 0), 0, 1)), P(((0, 1), 1), ((4, 0), 0, -1)), 4),
    # x +- i*y^k (swap of the variables)
    (P(((1, 0), 1), ((0, 2), 0, 1)), P(((1, 0), 1), ((0, 2), 0, -1)), 2),
    (P(((1, 0), 1), ((0, 3), 0, 1)), P(((1, 0), 1), ((0, 3), 0, -1)), 3),
    (P(((1, 0), 1), ((0, 4), 0, 1)), P(((1, 0), 1), ((0, 4), 0, -1)), 4),
    # the second coordinate line y against catalog branches
    (P(((0, 1), 1)), P(((1, 0), 1)), 1),
    (P(((0, 1), 1)), P(((2, 0), 1), ((0, 1), 0, 1)), 2),
    (P(((0, 1), 1)), P(((0, 2), 1), ((2, 0), 1)), 2),
    (P(((0, 1), 1)), P(((0, 2), 1), ((3, 0), 1)), 3),
    (P(((0, 1), 1)), P(((0, 2), 1), ((4, 0), 1)), 4),
    (P(((0, 1), 1)), P(((0, 2), 1), ((5, 0), 1)), 5),
    (P(((0, 1), 1)), P(((3, 0), 1), ((0, 4), 1)), 3),
    (P(((0, 1), 1)), P(((1, 0), 1), ((0, 2), 0, 1)), 1),
    (P(((0, 1), 1)), P(((2, 0), 1), ((1, 4), 1), ((0, 8), 1)), 2),
    # cusp against cusp with opposite sign: the ideal is (t^2, s^5)
    (P(((0, 2), 1), ((5, 0), 1)), P(((0, 2), 1), ((5, 0), -1)), 10),
    # tangent smooth branches y +- x^2 meet with multiplicity 2
    (P(((0, 1), 1), ((2, 0), 1)), P(((0, 1), 1), ((2, 0), -1)), 2),
]


def test_intersection_orders():
    for f, g, expected in FROZEN_INTERSECTIONS:
        assert intersection_order(f, g) == expected, (f, g, expected)


# --- double-point curves of the corank-1 catalog germs --------------------
# Germ (s, t^h, q); the oracle eliminates t' from the divided differences.
# Expected curves are written in (s, t) and compared up to a unit.

FROZEN_DOUBLE_CURVES = [
    # cross-cap (s, t^2, s*t) -> s
    (2, P(((1, 1), 1)), P(((1, 0), 1))),
    # S_{k-1} family (s, t^2, t^3 + s^k t) -> t^2 + s^k, k = 1..6
    *[
        (2, P(((0, 3), 1), ((k, 1), 1)), P(((0, 2), 1), ((k, 0), 1)))
        for k in range(1, 7)
    ],
    # B_k family (s, t^2, s^2 t + t^(2k+1)) -> s^2 + t^(2k), k = 2..4
    *[
        (2, P(((2, 1), 1), ((0, 2 * k + 1), 1)), P(((2, 0), 1), ((0, 2 * k), 1)))
        for k in range(2, 5)
    ],
    # C_k family (s, t^2, s*t^3 + s^k t) -> s*t^2 + s^k, k = 2..5
    *[
        (2, P(((1, 3), 1), ((k, 1), 1)), P(((1, 2), 1), ((k, 0), 1)))
        for k in range(2, 6)
    ],
    # F_4 (s, t^2, s^3 t + t^5) -> s^3 + t^4
    (2, P(((3, 1), 1), ((0, 5), 1)), P(((3, 0), 1), ((0, 4), 1))),
    # H_k family (s, t^3, s*t + t^(3k-1)) -> s^2 + s*t^(3k-2) + t^(6k-4)
    *[
        (
            3,
            P(((1, 1), 1), ((0, 3 * k - 1), 1)),
            P(((2, 0), 1), ((1, 3 * k - 2), 1), ((0, 6 * k - 4), 1)),
        )
        for k in range(1, 5)
    ],
]


def test_double_curves():
    for h, q, expected in FROZEN_DOUBLE_CURVES:
        got = double_curve_corank1(h, q)
        assert p_eq_up_to_unit(got, expected), (h, q, got, expected)


# --- monomial quotient dimensions ------------------------------------------

FROZEN_STAIRCASES = [
    # ramification ideal of the cyclic covers (s^k, t^k, s^(k-1) t^(k-1))
    *[([(k, 0), (0, k), (k - 1, k - 1)], k * k - 1) for k in range(2, 7)],
    # the second Fitting support (x, z, y^(k-1)) in three variables
    *[([(1, 0, 0), (0, 0, 1), (0, k - 1, 0)], k - 1) for k in range(2, 6)],
    ([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 1),
    # jacobian of t^2 + s^k: (t, s^(k-1))
    *[([(0, 1), (k - 1, 0)], k - 1) for k in range(2, 8)],
    ([(1, 0), (0, 1)], 1),
    ([(2, 0), (1, 1), (0, 2)], 3),
]


def test_staircases():
    for gens, expected in FROZEN_STAIRCASES:
        assert staircase_codim(gens) == expected, (gens, expected)


# --- chain determinants -----------------------------------------------------

FROZEN_CHAIN_DETS = [
    ([-2], -2),
    ([-2, -2], 3),
    ([-2, -2, -2], -4),
    ([-2, -2, -2, -2], 5),
    ([-2, -2, -2, -2, -2], -6),
    ([-2, -2, -2, -2, -2, -2], 7),
    ([-4], -4),
    ([-1, -2], 1),
    ([-2, -1, -2], 0),  # the degenerate triple behind the Y piece
]


def test_chain_dets():
    for eulers, expected in FROZEN_CHAIN_DETS:
        assert chain_det(eulers) == Fraction(expected), (eulers, expected)
