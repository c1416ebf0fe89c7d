"""Good embedded resolution of plane-curve germs by iterated blow-ups.

The resolver tracks every infinitely-near point in explicit affine
charts with coordinates in Q(i).  Each blow-up adds one exceptional
vertex, updates Euler numbers and edges, and pushes the strict
transforms forward until the total transform has normal crossings:
every branch smooth, transverse to exactly one exceptional curve, at a
point of its own, away from intersections of exceptional curves.

Branch points that leave Q(i) stop the run with a hard error carrying
the offending univariate polynomial, with one exception: a full Galois
packet of conjugate branches that is already transverse and simple is
finished collectively, one arrowhead per conjugate root.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .localring import intersection_multiplicity
from .poly import (
    MultiPoly,
    exact_div,
    is_squarefree,
    poly_gcd,
)
from .qi import GaussRational, Triple, qi_roots, t_is_zero

UV = ("u", "v")


class IrrationalPointError(ValueError):
    """An infinitely-near point needing a blow-up has no Q(i) coordinates."""

    def __init__(self, polynomial: MultiPoly):
        super().__init__(
            "branch point outside Q(i); roots of this polynomial would be "
            f"needed: {polynomial}"
        )
        self.polynomial = polynomial


class ReducibleBranchError(ValueError):
    """An input factor turned out to have several local branches."""

    def __init__(self, factor: MultiPoly, count: int):
        super().__init__(
            f"input factor {factor} is locally reducible: it acquired "
            f"{count} separate arrowhead events"
        )
        self.factor = factor


class CurveGerm:
    """A reduced plane-curve germ, listed by pairwise-coprime factors."""

    __slots__ = ("variables", "factors")

    def __init__(self, variables: Iterable[str], factors: Iterable[MultiPoly]):
        vs = tuple(variables)
        if len(vs) != 2:
            raise ValueError("a plane-curve germ needs exactly two variables")
        fs = []
        for f in factors:
            f = f.with_variables(vs)
            if f.is_zero():
                raise ValueError("zero polynomial is not a curve factor")
            if f.coefficient((0, 0)):
                raise ValueError(f"factor {f} does not vanish at the origin")
            if not is_squarefree(f):
                raise ValueError(f"factor {f} is not square-free")
            fs.append(f)
        if not fs:
            raise ValueError("empty factor list")
        for i in range(len(fs)):
            for j in range(i + 1, len(fs)):
                if not poly_gcd(fs[i], fs[j]).is_constant():
                    raise ValueError(
                        f"factors {fs[i]} and {fs[j]} share a component"
                    )
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "factors", tuple(fs))

    def __setattr__(self, name, value):
        raise AttributeError("CurveGerm is immutable")

    def __repr__(self):
        inner = ", ".join(str(f) for f in self.factors)
        return f"CurveGerm({self.variables!r}, ({inner}))"


@dataclass(frozen=True)
class EmbeddedResolutionGraph:
    """Decorated resolution graph: Euler numbers, tree edges, one arrowhead
    per analytic branch, and the full multiplicity table m_i(v)."""

    euler: dict               # vertex id -> Euler number
    edges: tuple              # sorted (a, b) pairs, a < b
    arrowheads: tuple         # (branch index, vertex id), branch index 1-based
    multiplicities: dict      # vertex id -> {branch index: natural}
    branches_of_factor: tuple # per input factor, tuple of its branch indices

    @property
    def vertex_ids(self) -> tuple:
        return tuple(sorted(self.euler))

    @property
    def branch_count(self) -> int:
        return sum(len(b) for b in self.branches_of_factor)

    def arrowhead_vertex(self, branch: int) -> int:
        for b, v in self.arrowheads:
            if b == branch:
                return v
        raise KeyError(f"no branch {branch}")

    def multiplicity(self, branch: int, vertex: int) -> int:
        return self.multiplicities[vertex][branch]

    def intersection_matrix(self) -> list:
        ids = self.vertex_ids
        pos = {v: i for i, v in enumerate(ids)}
        n = len(ids)
        m = [[0] * n for _ in range(n)]
        for v in ids:
            m[pos[v]][pos[v]] = self.euler[v]
        for a, b in self.edges:
            m[pos[a]][pos[b]] = 1
            m[pos[b]][pos[a]] = 1
        return m

    def to_text(self) -> str:
        lines = []
        for v in self.vertex_ids:
            lines.append(f"v{v} e={self.euler[v]} g=0")
        for a, b in self.edges:
            lines.append(f"v{a} -- v{b} +")
        for b, v in sorted(self.arrowheads):
            lines.append(f"arrow b{b} -> v{v}")
        for b in range(1, self.branch_count + 1):
            for v in self.vertex_ids:
                lines.append(f"m b{b} v{v} = {self.multiplicities[v][b]}")
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        lines = ["graph resolution {"]
        for v in self.vertex_ids:
            lines.append(f'  v{v} [label="v{v} e={self.euler[v]}"];')
        for a, b in self.edges:
            lines.append(f"  v{a} -- v{b};")
        for b, v in sorted(self.arrowheads):
            lines.append(f'  arrow{b} [shape=none, label="b{b}"];')
            lines.append(f"  arrow{b} -- v{v} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# integer linear algebra for the validation checks


def _int_det(matrix: Sequence[Sequence[int]]) -> int:
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(Fraction, row)) for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot_row = None
        for r in range(k, n):
            if m[r][k]:
                pivot_row = r
                break
        if pivot_row is None:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for r in range(k + 1, n):
            if m[r][k]:
                factor = m[r][k] * inv
                for c in range(k, n):
                    m[r][c] -= factor * m[k][c]
    assert det.denominator == 1
    return det.numerator


def _is_negative_definite(matrix: Sequence[Sequence[int]]) -> bool:
    for k in range(1, len(matrix) + 1):
        lead = [row[:k] for row in matrix[:k]]
        d = _int_det(lead)
        if d == 0 or (d > 0) != (k % 2 == 0):
            return False
    return True


def _validate_graph(graph: EmbeddedResolutionGraph) -> None:
    ids = graph.vertex_ids
    n = len(ids)
    if len(graph.edges) != n - 1:
        raise ArithmeticError("resolution graph is not a tree (edge count)")
    adj: dict = {v: [] for v in ids}
    for a, b in graph.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {ids[0]}
    queue = deque([ids[0]])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n:
        raise ArithmeticError("resolution graph is not connected")

    matrix = graph.intersection_matrix()
    if not _is_negative_definite(matrix):
        raise ArithmeticError("intersection matrix is not negative definite")

    pos = {v: i for i, v in enumerate(ids)}
    arrows_at: dict = {}
    for b, v in graph.arrowheads:
        arrows_at.setdefault(b, []).append(v)
    for b in range(1, graph.branch_count + 1):
        if len(arrows_at.get(b, [])) != 1:
            raise ArithmeticError(f"branch {b} does not have exactly one arrowhead")
    for b in range(1, graph.branch_count + 1):
        target = arrows_at[b][0]
        for w in ids:
            total = sum(
                graph.multiplicities[v][b] * matrix[pos[v]][pos[w]] for v in ids
            )
            total += 1 if w == target else 0
            if total != 0:
                raise ArithmeticError(
                    f"multiplicity relation fails for branch {b} at vertex {w}"
                )


# ---------------------------------------------------------------------------
# the blow-up tower


@dataclass
class _Point:
    """An infinitely-near point, in local coordinates centred on it.

    ``factors`` lists (factor id, local strict-transform equation in (u, v));
    ``exc_u``/``exc_v`` are the vertex ids of the exceptional curves with
    local equations u = 0 / v = 0, when present.
    """

    factors: list
    exc_u: Optional[int]
    exc_v: Optional[int]
    depth: int


_MAX_DEPTH = 64


def _restriction_coeffs(g: MultiPoly, axis: int) -> list[Triple]:
    """Ascending coefficient list of g restricted to the other axis."""
    deg = 0
    for e in g.terms:
        if e[axis] == 0:
            deg = max(deg, e[1 - axis])
    coeffs: list[Triple] = [(0, 0, 1)] * (deg + 1)
    for e, c in g.terms.items():
        if e[axis] == 0:
            coeffs[e[1 - axis]] = c
    return coeffs


def _poly_from_coeffs(coeffs: list[Triple], var: str) -> MultiPoly:
    return MultiPoly((var,), {(k,): c for k, c in enumerate(coeffs)})


def _root_sort_key(root: Triple):
    a, b, d = root
    return (d, a * a + b * b, a, b)


class _Resolver:
    def __init__(self, curve: CurveGerm):
        self.curve = curve
        self.euler: dict = {}
        self.edges: set = set()
        self.mult: dict = {}
        self.events: dict = {}
        self.next_vertex = 1
        self.queue: deque = deque()
        self.factor_ids = tuple(range(len(curve.factors)))

    # -- graph bookkeeping --------------------------------------------------

    def _new_vertex(self) -> int:
        w = self.next_vertex
        self.next_vertex += 1
        self.euler[w] = -1
        return w

    def _record_event(self, fid: int, vertex: int, count: int) -> None:
        self.events.setdefault(fid, []).append((vertex, count))

    # -- the main loop ------------------------------------------------------

    def run(self) -> EmbeddedResolutionGraph:
        initial = _Point(
            factors=[
                (fid, f.rename_variables(dict(zip(self.curve.variables, UV))))
                for fid, f in enumerate(self.curve.factors)
            ],
            exc_u=None,
            exc_v=None,
            depth=0,
        )
        self.queue.append(initial)
        while self.queue:
            point = self.queue.popleft()
            self._process(point)
        return self._finalize()

    def _process(self, point: _Point) -> None:
        if point.depth > _MAX_DEPTH:
            raise RuntimeError(
                "blow-up tower exceeded the depth guard; offending factors: "
                + ", ".join(str(g) for _, g in point.factors)
            )
        excs = [x for x in (point.exc_u, point.exc_v) if x is not None]
        if len(point.factors) == 1 and len(excs) == 1:
            fid, g = point.factors[0]
            axis = 0 if point.exc_u is not None else 1
            coeffs = _restriction_coeffs(g, axis)
            order = next(
                (k for k, c in enumerate(coeffs) if not t_is_zero(c)), None
            )
            if order is None:
                raise ArithmeticError(
                    "strict transform contains an exceptional curve"
                )
            if order == 1:
                self._record_event(fid, excs[0], 1)
                return
        self._blow_up(point)

    def _blow_up(self, point: _Point) -> None:
        w = self._new_vertex()
        excs = [x for x in (point.exc_u, point.exc_v) if x is not None]
        for x in excs:
            self.euler[x] -= 1
            self.edges.add((min(x, w), max(x, w)))
        if len(excs) == 2:
            a, b = sorted(excs)
            self.edges.discard((a, b))

        local_orders = {fid: g.local_order() for fid, g in point.factors}
        self.mult[w] = {}
        for fid in self.factor_ids:
            base = sum(self.mult[x][fid] for x in excs)
            self.mult[w][fid] = base + local_orders.get(fid, 0)

        u = MultiPoly.variable("u", UV)
        v = MultiPoly.variable("v", UV)

        # first chart: (u, v) = (a, a b); the new curve is a = 0 and the old
        # v-axis survives as b = 0
        by_root: dict = {}
        residuals: list = []
        chart_b_factors: list = []
        for fid, g in point.factors:
            m = local_orders[fid]
            ga = exact_div(g.substitute({"v": u * v}).with_variables(UV), u**m)
            coeffs = _restriction_coeffs(ga, 0)
            roots, residual = qi_roots(coeffs)
            for root, _ in roots:
                shifted = ga.substitute(
                    {"v": v + GaussRational.from_triple(root)}
                ).with_variables(UV)
                by_root.setdefault(root, []).append((fid, shifted))
            if len(residual) > 1:
                residuals.append((fid, _poly_from_coeffs(residual, "v")))
            gb = exact_div(g.substitute({"u": u * v}).with_variables(UV), v**m)
            if not gb.coefficient((0, 0)):
                chart_b_factors.append((fid, gb))

        self._handle_residuals(residuals, w)

        for root in sorted(by_root, key=_root_sort_key):
            exc_v = point.exc_v if t_is_zero(root) else None
            self.queue.append(
                _Point(
                    factors=by_root[root],
                    exc_u=w,
                    exc_v=exc_v,
                    depth=point.depth + 1,
                )
            )
        if chart_b_factors:
            self.queue.append(
                _Point(
                    factors=chart_b_factors,
                    exc_u=point.exc_u,
                    exc_v=w,
                    depth=point.depth + 1,
                )
            )

    def _handle_residuals(self, residuals: list, w: int) -> None:
        """Conjugate root packets: finished collectively when simple and
        transverse, a hard error otherwise."""
        for idx, (fid, res) in enumerate(residuals):
            if not is_squarefree(res):
                raise IrrationalPointError(res)
            for fid2, res2 in residuals[idx + 1 :]:
                if not poly_gcd(res, res2).is_constant():
                    raise IrrationalPointError(res)
            degree = res.total_degree()
            self._record_event(fid, w, degree)

    # -- assembling the result ----------------------------------------------

    def _finalize(self) -> EmbeddedResolutionGraph:
        branches_of_factor: list = []
        arrowheads: list = []
        branch_counts: list = []
        next_branch = 1
        for fid in self.factor_ids:
            events = self.events.get(fid, [])
            if len(events) != 1:
                raise ReducibleBranchError(
                    self.curve.factors[fid], len(events)
                )
            vertex, count = events[0]
            ids = tuple(range(next_branch, next_branch + count))
            next_branch += count
            branches_of_factor.append(ids)
            for b in ids:
                arrowheads.append((b, vertex))
            branch_counts.append(count)

        multiplicities: dict = {}
        for v in self.euler:
            table: dict = {}
            for fid in self.factor_ids:
                count = branch_counts[fid]
                total = self.mult[v][fid]
                if total % count:
                    raise ArithmeticError(
                        "conjugate packet multiplicity is not divisible by "
                        f"the packet size at vertex {v}"
                    )
                for b in branches_of_factor[fid]:
                    table[b] = total // count
            multiplicities[v] = table

        graph = EmbeddedResolutionGraph(
            euler=dict(self.euler),
            edges=tuple(sorted(self.edges)),
            arrowheads=tuple(arrowheads),
            multiplicities=multiplicities,
            branches_of_factor=tuple(branches_of_factor),
        )
        _validate_graph(graph)
        return graph


def resolve_curve(curve: CurveGerm) -> EmbeddedResolutionGraph:
    """Resolve the curve germ; see the module docstring for the contract."""
    return _Resolver(curve).run()


# ---------------------------------------------------------------------------
# graph-level queries and operations


def branch_intersection(graph: EmbeddedResolutionGraph, i: int, k: int) -> int:
    """Pairwise intersection number of two analytic branches, read off the
    graph by the projection formula; both readings must agree."""
    if i == k:
        raise ValueError("need two distinct branches")
    via_i = graph.multiplicities[graph.arrowhead_vertex(i)][k]
    via_k = graph.multiplicities[graph.arrowhead_vertex(k)][i]
    if via_i != via_k:
        raise ArithmeticError(
            f"projection formula asymmetry between branches {i} and {k}"
        )
    return via_i


def verify_branch_intersections(
    curve: CurveGerm, graph: EmbeddedResolutionGraph
) -> None:
    """Cross-check graph-read intersection numbers against the local-algebra
    engine, factor against factor (conjugate packets sum over their
    branchlets)."""
    nf = len(curve.factors)
    for i in range(nf):
        for k in range(i + 1, nf):
            expected = intersection_multiplicity(
                curve.factors[i], curve.factors[k]
            )
            got = sum(
                branch_intersection(graph, bi, bk)
                for bi in graph.branches_of_factor[i]
                for bk in graph.branches_of_factor[k]
            )
            if got != expected:
                raise ArithmeticError(
                    f"graph intersection {got} of factors {i} and {k} "
                    f"disagrees with the local computation {expected}"
                )


def blow_up_point(
    graph: EmbeddedResolutionGraph,
    vertex: int,
    corner_with: Optional[int] = None,
    arrow_branch: Optional[int] = None,
) -> EmbeddedResolutionGraph:
    """Blow up one more point on an exceptional curve of a finished graph:
    a generic point, a corner (corner_with), or the point where a branch
    arrowhead sits (arrow_branch).  Multiplicities extend by the sum over
    the centre."""
    if corner_with is not None and arrow_branch is not None:
        raise ValueError("pick one kind of centre")
    euler = dict(graph.euler)
    edges = set(graph.edges)
    w = max(euler) + 1
    euler[w] = -1
    euler[vertex] -= 1
    edges.add((min(vertex, w), max(vertex, w)))
    involved = [vertex]
    if corner_with is not None:
        pair = (min(vertex, corner_with), max(vertex, corner_with))
        if pair not in edges:
            raise ValueError("corner_with must name an adjacent vertex")
        edges.discard(pair)
        euler[corner_with] -= 1
        edges.add((min(corner_with, w), max(corner_with, w)))
        involved.append(corner_with)
    arrowheads = list(graph.arrowheads)
    if arrow_branch is not None:
        slot = arrowheads.index((arrow_branch, vertex))
        arrowheads[slot] = (arrow_branch, w)
    multiplicities = {v: dict(t) for v, t in graph.multiplicities.items()}
    table = {}
    for b in range(1, graph.branch_count + 1):
        total = sum(multiplicities[v][b] for v in involved)
        if arrow_branch == b:
            total += 1
        table[b] = total
    multiplicities[w] = table
    out = EmbeddedResolutionGraph(
        euler=euler,
        edges=tuple(sorted(edges)),
        arrowheads=tuple(arrowheads),
        multiplicities=multiplicities,
        branches_of_factor=graph.branches_of_factor,
    )
    _validate_graph(out)
    return out
