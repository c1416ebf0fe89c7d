"""Analytic invariants of holomorphic map germs from the plane to 3-space.

A germ is stored by its three component polynomials in (s, t).  The
module computes the ramification ideal and its codimension, the
presentation matrix over the target coordinates for germs whose first
two components are (s, t^k), the image equation, Fitting ideals, the
double-point curve, and the derived integer invariants reported
together in an InvariantReport.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Union

from .localring import (
    INFINITE,
    Infinite,
    LocalIdeal,
    Undecided,
    UndecidedError,
    milnor_number,
    quotient_codim,
)
from .poly import (
    MultiPoly,
    PolyMatrix,
    divided_difference,
    equal_up_to_unit,
    exact_div,
    is_squarefree,
    poly_parse,
    unit_normalize,
)

SOURCE = ("s", "t")
TARGET = ("x", "y", "z")


class MapGerm:
    """A map germ (phi1, phi2, phi3) from the plane to 3-space."""

    __slots__ = ("phi1", "phi2", "phi3", "corank1_power")

    def __init__(
        self,
        phi1: MultiPoly,
        phi2: MultiPoly,
        phi3: MultiPoly,
        corank1_power: Optional[int] = None,
    ):
        comps = []
        for p in (phi1, phi2, phi3):
            p = p.with_variables(SOURCE)
            if not p.is_zero() and p.coefficient((0, 0)):
                raise ValueError(f"component {p} does not vanish at the origin")
            comps.append(p)
        if corank1_power is not None:
            k = corank1_power
            s = MultiPoly.variable("s", SOURCE)
            tk = MultiPoly.variable("t", SOURCE) ** k
            if comps[0] != s or comps[1] != tk:
                raise ValueError(
                    f"monomial normal form requires components (s, t^{k}) exactly"
                )
        object.__setattr__(self, "phi1", comps[0])
        object.__setattr__(self, "phi2", comps[1])
        object.__setattr__(self, "phi3", comps[2])
        object.__setattr__(self, "corank1_power", corank1_power)

    def __setattr__(self, name, value):
        raise AttributeError("MapGerm is immutable")

    @classmethod
    def from_components(
        cls, phi1: MultiPoly, phi2: MultiPoly, phi3: MultiPoly
    ) -> "MapGerm":
        """Build a germ, detecting the (s, t^k) monomial normal form."""
        phi1 = phi1.with_variables(SOURCE)
        phi2 = phi2.with_variables(SOURCE)
        k = None
        if phi1 == MultiPoly.variable("s", SOURCE):
            terms = list(phi2.terms.items())
            if len(terms) == 1:
                (es, et), c = terms[0]
                if es == 0 and et >= 1 and c == (1, 0, 1):
                    k = et
        return cls(phi1, phi2, phi3, corank1_power=k)

    @classmethod
    def parse(cls, text: str) -> "MapGerm":
        """Parse germ text: three components separated by semicolons,
        optionally wrapped as ``germ { ...; ...; ... }``."""
        body = text.strip()
        if body.startswith("germ"):
            body = body[len("germ") :].strip()
            if not (body.startswith("{") and body.endswith("}")):
                raise ValueError("germ text must look like 'germ { ...; ...; ... }'")
            body = body[1:-1]
        parts = [p.strip() for p in body.split(";") if p.strip()]
        if len(parts) != 3:
            raise ValueError(f"expected 3 components, found {len(parts)}")
        comps = [poly_parse(p, SOURCE) for p in parts]
        return cls.from_components(*comps)

    def components(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        return (self.phi1, self.phi2, self.phi3)

    def __repr__(self):
        tag = (
            f", corank1_power={self.corank1_power}" if self.corank1_power else ""
        )
        return f"MapGerm({self.phi1}; {self.phi2}; {self.phi3}{tag})"


# ---------------------------------------------------------------------------
# ramification ideal and C


def _jacobian(germ: MapGerm) -> list[list[MultiPoly]]:
    return [
        [p.derivative("s"), p.derivative("t")] for p in germ.components()
    ]


def _signed_minors(rows: list[list[MultiPoly]]) -> list[MultiPoly]:
    """Cofactor-signed 2x2 minors of a 3x2 matrix, indexed by the dropped row."""
    def det2(r1, r2):
        return rows[r1][0] * rows[r2][1] - rows[r1][1] * rows[r2][0]

    return [det2(1, 2), -det2(0, 2), det2(0, 1)]


def ramification_ideal(germ: MapGerm) -> LocalIdeal:
    """Ideal of the 2x2 minors of the Jacobian."""
    return LocalIdeal(SOURCE, _signed_minors(_jacobian(germ)))


def invariant_C(germ: MapGerm, degree_cap: int = 256) -> Union[int, Infinite]:
    """Codimension of the ramification ideal."""
    result = quotient_codim(ramification_ideal(germ), degree_cap)
    if isinstance(result, Undecided):
        raise UndecidedError(result.cap)
    return result


def C_weighted_homogeneous(w1: int, w2: int, d1: int, d2: int, d3: int) -> int:
    """Closed form for weighted-homogeneous germs with source weights
    (w1, w2) and component degrees (d1, d2, d3)."""
    if w1 <= 0 or w2 <= 0:
        raise ValueError("weights must be positive")
    num = (
        d1 * d2
        + d2 * d3
        + d3 * d1
        - (w1 + w2) * (d1 + d2 + d3 - w1 - w2)
        - w1 * w2
    )
    den = w1 * w2
    if num % den:
        raise ValueError("formula value is not an integer; invalid weight data")
    value = num // den
    if value < 0:
        raise ValueError("formula value is negative; invalid weight data")
    return value


# ---------------------------------------------------------------------------
# presentation matrix, image equation, Fitting ideals, T


def presentation_matrix(germ: MapGerm) -> PolyMatrix:
    """The k x k matrix presenting the pushforward of the structure sheaf
    over the target, for germs in the (s, t^k) monomial normal form."""
    k = germ.corank1_power
    if k is None:
        raise ValueError(
            "presentation matrix needs the (s, t^k) normal form; for other "
            "germs supply the matrix or the image equation directly"
        )
    zero3 = MultiPoly.zero(TARGET)
    x = MultiPoly.variable("x", TARGET)
    y = MultiPoly.variable("y", TARGET)
    z = MultiPoly.variable("z", TARGET)
    lam: list[list[MultiPoly]] = [[zero3 for _ in range(k)] for _ in range(k)]
    t = MultiPoly.variable("t", SOURCE)
    for j in range(k):
        p = germ.phi3 * t**j
        for (a, b), c in p.terms.items():
            i = b % k
            q = b // k
            lam[i][j] = lam[i][j] + (x**a) * (y**q) * MultiPoly.constant(
                c, TARGET
            )
    for i in range(k):
        lam[i][i] = lam[i][i] - z
    return PolyMatrix(lam)


def image_equation(source: Union[MapGerm, PolyMatrix]) -> MultiPoly:
    """Determinant of the presentation matrix: an equation of the image.
    Not necessarily reduced; check squarefreeness separately."""
    lam = presentation_matrix(source) if isinstance(source, MapGerm) else source
    return lam.det()


def fitting_ideal(lam: PolyMatrix, i: int) -> LocalIdeal:
    """Ideal of the (N - i)-minors of an N x N presentation matrix."""
    n, m = lam.shape
    if n != m:
        raise ValueError("presentation matrix must be square")
    if not 0 <= i < n:
        raise ValueError(f"need 0 <= i < {n}")
    minors = lam.minors(n - i)
    origin = (0,) * len(lam.variables)
    for q in minors:
        if not q.is_zero() and q.coefficient(origin):
            raise ValueError("minor ideal contains a unit; the quotient is trivial")
    return LocalIdeal(lam.variables, minors)


def invariant_T(
    source: Union[MapGerm, PolyMatrix], degree_cap: int = 256
) -> Union[int, Infinite]:
    """Codimension of the second Fitting ideal: the count of triple values."""
    lam = presentation_matrix(source) if isinstance(source, MapGerm) else source
    n, _ = lam.shape
    if n <= 2:
        # the (N-2)-minor ideal is generated by the empty minor, which is 1
        return 0
    try:
        ideal = fitting_ideal(lam, 2)
    except ValueError as err:
        if "unit" in str(err):
            return 0
        raise
    result = quotient_codim(ideal, degree_cap)
    if isinstance(result, Undecided):
        raise UndecidedError(result.cap)
    return result


# ---------------------------------------------------------------------------
# double-point data


def pullback(germ: MapGerm, g: MultiPoly) -> MultiPoly:
    """Compose a target polynomial with the germ."""
    g = g.with_variables(TARGET)
    out = g.substitute(
        {"x": germ.phi1, "y": germ.phi2, "z": germ.phi3}
    )
    return out.with_variables(SOURCE)


def double_curve(germ: MapGerm, f: Optional[MultiPoly] = None) -> MultiPoly:
    """The double-point curve in the source: the common exact quotient of
    the pulled-back partials of the image equation by the signed Jacobian
    minors.  All usable coordinate directions must agree up to a nonzero
    constant."""
    if f is None:
        f = image_equation(germ)
    f = f.with_variables(TARGET)
    minors = _signed_minors(_jacobian(germ))
    results: list[MultiPoly] = []
    failures: list[str] = []
    for var, minor in zip(TARGET, minors):
        if minor.is_zero():
            continue
        numerator = pullback(germ, f.derivative(var))
        if numerator.is_zero():
            continue
        try:
            results.append(exact_div(numerator, minor))
        except ValueError:
            failures.append(var)
    if not results:
        raise ValueError(
            "no coordinate direction yields an exact quotient; the equation "
            "does not match the germ"
        )
    if failures:
        raise ArithmeticError(
            f"quotient exists for some directions but fails for {failures}"
        )
    first = results[0]
    for other in results[1:]:
        if not equal_up_to_unit(first, other):
            raise ArithmeticError(
                "coordinate directions disagree on the double-point curve"
            )
    return unit_normalize(first)


def double_lift_ideal(germ: MapGerm) -> LocalIdeal:
    """Ideal of the lifted double-point locus in (s, t, s', t'):
    component differences plus the 2x2 minors of the divided-difference
    matrix, primed first in s and then in t."""
    vs = ("s", "t", "s'", "t'")
    diffs: list[MultiPoly] = []
    alpha: list[list[MultiPoly]] = []
    for p in germ.components():
        primed = p.rename_variables({"s": "s'", "t": "t'"})
        diffs.append(p.with_variables(vs) - primed.with_variables(vs))
        col_s = divided_difference(p, "s").with_variables(vs)
        p_primed_s = p.substitute({"s": MultiPoly.variable("s'", ("s'",))})
        col_t = divided_difference(
            p_primed_s.with_variables(("s'", "t")), "t"
        ).with_variables(vs)
        alpha.append([col_s, col_t])
    minors = _signed_minors(alpha)
    return LocalIdeal(vs, diffs + minors)


def divided_difference_matrix(germ: MapGerm) -> PolyMatrix:
    """The 3 x 2 divided-difference matrix in (s, t, s', t'); its diagonal
    specialization s' = s, t' = t is the Jacobian."""
    vs = ("s", "t", "s'", "t'")
    rows = []
    for p in germ.components():
        col_s = divided_difference(p, "s").with_variables(vs)
        p_primed_s = p.substitute({"s": MultiPoly.variable("s'", ("s'",))})
        col_t = divided_difference(
            p_primed_s.with_variables(("s'", "t")), "t"
        ).with_variables(vs)
        rows.append([col_s, col_t])
    return PolyMatrix(rows)


# ---------------------------------------------------------------------------
# derived invariants and the report


def quasihomogeneous_weights(
    germ: MapGerm, bound: int = 24
) -> Optional[tuple[int, int, tuple[int, int, int]]]:
    """Positive coprime source weights making every component weighted
    homogeneous, with the component degrees; None when no weights below
    the bound work."""
    comps = germ.components()
    for total in range(2, 2 * bound + 1):
        for w1 in range(1, total):
            w2 = total - w1
            if w1 > bound or w2 > bound or gcd(w1, w2) != 1:
                continue
            degrees = []
            for p in comps:
                if p.is_zero():
                    degrees.append(0)
                    continue
                values = {a * w1 + b * w2 for (a, b) in p.terms}
                if len(values) != 1:
                    degrees = None
                    break
                degrees.append(values.pop())
            if degrees is not None:
                return (w1, w2, tuple(degrees))
    return None


@dataclass(frozen=True)
class InvariantReport:
    """All computed invariants of one germ, with provenance flags."""

    C: Union[int, Infinite]
    T: Optional[Union[int, Infinite]] = None
    image_f: Optional[MultiPoly] = None
    double_curve_d: Optional[MultiPoly] = None
    mu_D: Optional[Union[int, Infinite]] = None
    Omega: Optional[int] = None
    L: Optional[int] = None
    mu_I: Optional[int] = None
    N: Optional[int] = None
    flags: dict = field(default_factory=dict)


def derive_report(
    C: Union[int, Infinite],
    T: Optional[Union[int, Infinite]] = None,
    mu_D: Optional[Union[int, Infinite]] = None,
    image_f: Optional[MultiPoly] = None,
    double_curve_d: Optional[MultiPoly] = None,
    quasihomogeneous: bool = False,
) -> InvariantReport:
    """Assemble the report: vanishing cycles Omega = -C, the link-count
    combination L = C - 3T, and the two formula invariants that carry
    convention caveats."""
    flags: dict = {}
    Omega = None
    L = None
    mu_I = None
    N = None
    if isinstance(C, int):
        Omega = -C
        if isinstance(T, int):
            L = C - 3 * T
            if isinstance(mu_D, int):
                num = 4 * T - C - mu_D + 1
                if num % 2 == 0:
                    mu_I = num // 2
                    flags["mu_I"] = (
                        "formula value reported verbatim; the transcribed sign "
                        "convention can give negative values"
                    )
                else:
                    flags["mu_I"] = "formula value is not an integer; omitted"
                if quasihomogeneous:
                    N = mu_D - 6 * T - C + 1
                    flags["N"] = "valid under the quasihomogeneity hypothesis"
                else:
                    flags["N"] = "omitted: germ not certified quasihomogeneous"
    if image_f is not None:
        flags["image_f"] = (
            "reduced" if is_squarefree(image_f) else "not reduced (repeated factor)"
        )
    return InvariantReport(
        C=C,
        T=T,
        image_f=image_f,
        double_curve_d=double_curve_d,
        mu_D=mu_D,
        Omega=Omega,
        L=L,
        mu_I=mu_I,
        N=N,
        flags=flags,
    )


def analyze_germ(
    germ: MapGerm,
    matrix: Optional[PolyMatrix] = None,
    degree_cap: int = 256,
) -> InvariantReport:
    """Compute every invariant available for the germ.  A presentation
    matrix is derived for (s, t^k) germs and may be supplied for others."""
    C = invariant_C(germ, degree_cap)
    lam = matrix
    if lam is None and germ.corank1_power is not None:
        lam = presentation_matrix(germ)
    T = None
    f = None
    d = None
    mu = None
    if lam is not None:
        T = invariant_T(lam, degree_cap)
        f = image_equation(lam)
        if germ.corank1_power is not None:
            d = double_curve(germ, f)
            mu = milnor_number(d, degree_cap)
    weights = quasihomogeneous_weights(germ)
    report = derive_report(
        C,
        T=T,
        mu_D=mu,
        image_f=unit_normalize(f) if f is not None else None,
        double_curve_d=d,
        quasihomogeneous=weights is not None,
    )
    if weights is not None:
        report.flags["weights"] = (
            f"quasihomogeneous with weights {weights[0]}, {weights[1]} and "
            f"degrees {weights[2]}"
        )
    return report
