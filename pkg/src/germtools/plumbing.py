"""Decorated plumbing graphs and the move calculus used to compare them.

A plumbing graph is a connected multigraph whose vertices carry an Euler
number, a genus, and a boundary count, whose edges carry a sign (loops
allowed), and which may have labelled arrowheads.  The moves implemented
here (sign flips at a vertex, blow-down of a +-1 vertex in its three
shapes, 0-chain absorption, oriented handle absorption) preserve the
plumbed 3-manifold; ``graphs_equivalent`` compares two graphs by
normalizing both and searching for a decorated isomorphism whose edge
signs agree up to sign flips.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .resolution import _int_det

PLUS = 1
MINUS = -1


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple   # (id, euler, genus, boundary_count), sorted by id
    edges: tuple      # (a, b, sign) with a <= b, sorted; loops have a == b
    arrowheads: tuple # (label, vertex), sorted

    def __post_init__(self):
        ids = [v[0] for v in self.vertices]
        if not ids:
            raise ValueError("empty plumbing graph")
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex id")
        known = set(ids)
        for v, e, g, b in self.vertices:
            if g < 0 or b < 0:
                raise ValueError("genus and boundary count must be nonnegative")
        for a, b, s in self.edges:
            if a not in known or b not in known:
                raise ValueError(f"edge ({a}, {b}) leaves the vertex set")
            if s not in (PLUS, MINUS):
                raise ValueError("edge sign must be +1 or -1")
            if a > b:
                raise ValueError("edge endpoints must be sorted")
        for label, v in self.arrowheads:
            if v not in known:
                raise ValueError(f"arrowhead at unknown vertex {v}")
        if not _connected(known, self.edges):
            raise ValueError("plumbing graph must be connected")

    # -- convenience accessors ----------------------------------------------

    @property
    def vertex_ids(self) -> tuple:
        return tuple(v[0] for v in self.vertices)

    def decoration(self, vid: int) -> tuple:
        for v, e, g, b in self.vertices:
            if v == vid:
                return (e, g, b)
        raise KeyError(vid)

    def euler(self, vid: int) -> int:
        return self.decoration(vid)[0]

    def __str__(self):
        return to_text(self)


def _connected(ids: set, edges: Iterable) -> bool:
    if len(ids) == 1:
        return True
    adj: dict = {v: set() for v in ids}
    for a, b, _ in edges:
        adj[a].add(b)
        adj[b].add(a)
    start = next(iter(ids))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(ids)


def make_graph(vertices, edges=(), arrowheads=()) -> PlumbingGraph:
    """Build a graph from loose data: vertices as (id, euler) or
    (id, euler, genus) or (id, euler, genus, boundary) tuples, edges as
    (a, b) meaning a plus edge or (a, b, sign)."""
    vs = []
    for item in vertices:
        item = tuple(item)
        vs.append(item + (0,) * (4 - len(item)))
    es = []
    for item in edges:
        item = tuple(item)
        if len(item) == 2:
            item = item + (PLUS,)
        a, b, s = item
        es.append((min(a, b), max(a, b), s))
    return PlumbingGraph(
        vertices=tuple(sorted(vs)),
        edges=tuple(sorted(es, key=_edge_key)),
        arrowheads=tuple(sorted(arrowheads)),
    )


def _edge_key(edge):
    a, b, s = edge
    return (a, b, 0 if s == PLUS else 1)


def _rebuild(vertices, edges, arrowheads) -> PlumbingGraph:
    return PlumbingGraph(
        vertices=tuple(sorted(vertices)),
        edges=tuple(sorted(edges, key=_edge_key)),
        arrowheads=tuple(sorted(arrowheads)),
    )


Y_GRAPH = make_graph([(1, -1), (2, -2), (3, -2)], [(1, 2), (1, 3)])


# ---------------------------------------------------------------------------
# intersection matrix


def intersection_matrix(graph: PlumbingGraph) -> list:
    """Symmetric integer matrix: Euler numbers plus twice the signed loop
    count on the diagonal, signed edge counts off it.  Arrowheads do not
    count."""
    ids = graph.vertex_ids
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    m = [[0] * n for _ in range(n)]
    for v, e, g, b in graph.vertices:
        m[pos[v]][pos[v]] = e
    for a, b, s in graph.edges:
        if a == b:
            m[pos[a]][pos[a]] += 2 * s
        else:
            m[pos[a]][pos[b]] += s
            m[pos[b]][pos[a]] += s
    return m


def determinant(graph: PlumbingGraph) -> int:
    return _int_det(intersection_matrix(graph))


# ---------------------------------------------------------------------------
# moves; every move returns a new graph


def _check_plain(graph: PlumbingGraph, v: int, euler: Optional[int] = None):
    e, g, b = graph.decoration(v)
    if g != 0 or b != 0:
        raise ValueError(f"vertex {v} carries genus or boundary")
    if any(base == v for _, base in graph.arrowheads):
        raise ValueError(f"vertex {v} carries an arrowhead")
    if euler is not None and e != euler:
        raise ValueError(f"vertex {v} has Euler number {e}, need {euler}")
    return e


def _incident(graph: PlumbingGraph, v: int):
    """Non-loop edges at v as (other endpoint, sign), plus loops at v."""
    ends = []
    loops = []
    for a, b, s in graph.edges:
        if a == v and b == v:
            loops.append(s)
        elif a == v:
            ends.append((b, s))
        elif b == v:
            ends.append((a, s))
    return ends, loops


def move_R0a(graph: PlumbingGraph, v: int) -> PlumbingGraph:
    """Flip the sign of every non-loop edge at v."""
    if v not in graph.vertex_ids:
        raise ValueError(f"no vertex {v}")
    edges = []
    for a, b, s in graph.edges:
        if a != b and v in (a, b):
            edges.append((a, b, -s))
        else:
            edges.append((a, b, s))
    return _rebuild(graph.vertices, edges, graph.arrowheads)


def move_R1_blowdown(graph: PlumbingGraph, v: int) -> PlumbingGraph:
    """Blow down a genus-0 vertex with Euler number +-1 and at most two
    edge-ends: delete a leaf, fuse a two-valent chain vertex into a direct
    edge, or turn a double connection into a loop."""
    eps = _check_plain(graph, v)
    if eps not in (1, -1):
        raise ValueError(f"vertex {v} has Euler number {eps}, need +1 or -1")
    ends, loops = _incident(graph, v)
    if loops:
        raise ValueError(f"vertex {v} carries a loop")
    if len(ends) == 0:
        raise ValueError("cannot blow down the only vertex")
    if len(ends) > 2:
        raise ValueError(f"vertex {v} has more than two edge-ends")

    vertices = [x for x in graph.vertices if x[0] != v]
    edges = [edge for edge in graph.edges if v not in edge[:2]]

    def bump(vid: int, amount: int):
        for idx, (w, e, g, b) in enumerate(vertices):
            if w == vid:
                vertices[idx] = (w, e + amount, g, b)
                return
        raise AssertionError

    if len(ends) == 1:
        (w, _s) = ends[0]
        bump(w, -eps)
    elif ends[0][0] != ends[1][0]:
        (w1, s1), (w2, s2) = ends
        bump(w1, -eps)
        bump(w2, -eps)
        edges.append((min(w1, w2), max(w1, w2), -eps * s1 * s2))
    else:
        (w, s1), (_, s2) = ends
        bump(w, -2 * eps)
        edges.append((w, w, -eps * s1 * s2))
    return _rebuild(vertices, edges, graph.arrowheads)


def move_R3_zero_chain(graph: PlumbingGraph, v: int) -> PlumbingGraph:
    """Absorb a 0-chain: a plain Euler-0 vertex with exactly two edges to
    distinct neighbours i, j melts away and i, j merge, adding Euler
    numbers and genera; edges inherited from the j side are re-signed by
    minus the product of the two absorbed edge signs."""
    _check_plain(graph, v, euler=0)
    ends, loops = _incident(graph, v)
    if loops or len(ends) != 2 or ends[0][0] == ends[1][0]:
        raise ValueError(f"vertex {v} is not a 0-chain between distinct vertices")
    (i, si), (j, sj) = sorted(ends)
    factor = -si * sj

    merged = None
    others = []
    dec = {w: (e, g, b) for w, e, g, b in graph.vertices}
    ei, gi, bi = dec[i][0], dec[i][1], dec[i][2]
    ej, gj, bj = dec[j][0], dec[j][1], dec[j][2]
    merged = (i, ei + ej, gi + gj, bi + bj)
    for w, e, g, b in graph.vertices:
        if w not in (v, i, j):
            others.append((w, e, g, b))
    vertices = others + [merged]

    edges = []
    for a, b, s in graph.edges:
        if v in (a, b):
            continue
        if a == j and b == j:
            edges.append((i, i, s))
        elif a == j or b == j:
            other = a if b == j else b
            other = i if other == j else other
            new = (min(other, i), max(other, i), s * factor)
            edges.append(new)
        else:
            edges.append((a, b, s))
    arrowheads = [(lab, i if base == j else base) for lab, base in graph.arrowheads]
    return _rebuild(vertices, edges, arrowheads)


def move_R5_handle(graph: PlumbingGraph, v: int) -> PlumbingGraph:
    """Absorb an oriented handle: a plain Euler-0 vertex doubly connected
    to one neighbour by a plus and a minus edge disappears into a genus
    increment."""
    _check_plain(graph, v, euler=0)
    ends, loops = _incident(graph, v)
    if loops or len(ends) != 2 or ends[0][0] != ends[1][0]:
        raise ValueError(f"vertex {v} is not doubly connected to one neighbour")
    if {ends[0][1], ends[1][1]} != {PLUS, MINUS}:
        raise ValueError("handle absorption needs one plus and one minus edge")
    i = ends[0][0]
    vertices = []
    for w, e, g, b in graph.vertices:
        if w == v:
            continue
        if w == i:
            vertices.append((w, e, g + 1, b))
        else:
            vertices.append((w, e, g, b))
    edges = [edge for edge in graph.edges if v not in edge[:2]]
    return _rebuild(vertices, edges, graph.arrowheads)


# -- inverse moves, used by the round-trip property tests -------------------


def blow_up_edge(graph: PlumbingGraph, index: int, eps: int) -> PlumbingGraph:
    """Inverse of the two-valent blow-down: subdivide the edge at the given
    position with a new vertex of Euler number eps (+1 or -1)."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    a, b, s = graph.edges[index]
    if a == b:
        raise ValueError("cannot subdivide a loop")
    w = max(graph.vertex_ids) + 1
    vertices = []
    for vid, e, g, bc in graph.vertices:
        if vid in (a, b):
            vertices.append((vid, e + eps, g, bc))
        else:
            vertices.append((vid, e, g, bc))
    vertices.append((w, eps, 0, 0))
    edges = [edge for k, edge in enumerate(graph.edges) if k != index]
    edges.append((min(a, w), max(a, w), PLUS))
    edges.append((min(b, w), max(b, w), -eps * s))
    return _rebuild(vertices, edges, graph.arrowheads)


def blow_up_leaf(graph: PlumbingGraph, v: int, eps: int) -> PlumbingGraph:
    """Inverse of the one-valent blow-down: sprout a new Euler-eps leaf
    at v, shifting v's Euler number by eps."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    w = max(graph.vertex_ids) + 1
    vertices = []
    for vid, e, g, bc in graph.vertices:
        if vid == v:
            vertices.append((vid, e + eps, g, bc))
        else:
            vertices.append((vid, e, g, bc))
    vertices.append((w, eps, 0, 0))
    edges = list(graph.edges) + [(min(v, w), max(v, w), PLUS)]
    return _rebuild(vertices, edges, graph.arrowheads)


def extrude_handle(graph: PlumbingGraph, v: int) -> PlumbingGraph:
    """Inverse of handle absorption: trade one unit of genus at v for a
    doubly-connected Euler-0 neighbour."""
    e, g, b = graph.decoration(v)
    if g < 1:
        raise ValueError(f"vertex {v} has no genus to extrude")
    w = max(graph.vertex_ids) + 1
    vertices = []
    for vid, ee, gg, bb in graph.vertices:
        if vid == v:
            vertices.append((vid, ee, gg - 1, bb))
        else:
            vertices.append((vid, ee, gg, bb))
    vertices.append((w, 0, 0, 0))
    edges = list(graph.edges) + [(v, w, PLUS), (v, w, MINUS)]
    return _rebuild(vertices, edges, graph.arrowheads)


# ---------------------------------------------------------------------------
# normalization


def _find_R1(graph: PlumbingGraph):
    for v, e, g, b in graph.vertices:
        if e in (1, -1) and g == 0 and b == 0:
            if any(base == v for _, base in graph.arrowheads):
                continue
            ends, loops = _incident(graph, v)
            if loops or not 1 <= len(ends) <= 2:
                continue
            return v
    return None


def _find_R3(graph: PlumbingGraph):
    for v, e, g, b in graph.vertices:
        if e == 0 and g == 0 and b == 0:
            if any(base == v for _, base in graph.arrowheads):
                continue
            ends, loops = _incident(graph, v)
            if loops or len(ends) != 2 or ends[0][0] == ends[1][0]:
                continue
            return v
    return None


def _find_R5(graph: PlumbingGraph):
    for v, e, g, b in graph.vertices:
        if e == 0 and g == 0 and b == 0:
            if any(base == v for _, base in graph.arrowheads):
                continue
            ends, loops = _incident(graph, v)
            if loops or len(ends) != 2 or ends[0][0] != ends[1][0]:
                continue
            if {ends[0][1], ends[1][1]} == {PLUS, MINUS}:
                return v
    return None


def canonical_signs(graph: PlumbingGraph) -> PlumbingGraph:
    """Push minus signs off a spanning tree by sign flips: the unique
    representative of the flip class with an all-plus spanning tree (built
    from the sorted edge list)."""
    parent: dict = {v: None for v in graph.vertex_ids}
    parity: dict = {}
    root = graph.vertex_ids[0]
    parity[root] = 0
    adj: dict = {v: [] for v in graph.vertex_ids}
    for a, b, s in graph.edges:
        if a != b:
            adj[a].append((b, s))
            adj[b].append((a, s))
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, s in adj[v]:
            if w not in parity:
                parity[w] = parity[v] ^ (0 if s == PLUS else 1)
                queue.append(w)
    edges = []
    for a, b, s in graph.edges:
        if a == b:
            edges.append((a, b, s))
        else:
            flip = parity[a] ^ parity[b]
            edges.append((a, b, -s if flip else s))
    return _rebuild(graph.vertices, edges, graph.arrowheads)


def normalize(graph: PlumbingGraph) -> PlumbingGraph:
    """Exhaust blow-downs, 0-chain and handle absorptions (each strictly
    drops the vertex count), then canonicalize signs."""
    current = graph
    while True:
        v = _find_R1(current)
        if v is not None:
            current = move_R1_blowdown(current, v)
            continue
        v = _find_R3(current)
        if v is not None:
            current = move_R3_zero_chain(current, v)
            continue
        v = _find_R5(current)
        if v is not None:
            current = move_R5_handle(current, v)
            continue
        break
    return canonical_signs(current)


# ---------------------------------------------------------------------------
# equivalence


MAX_COMPARE_VERTICES = 24


def _vertex_profile(graph: PlumbingGraph):
    ends_count: dict = {v: 0 for v in graph.vertex_ids}
    loop_signs: dict = {v: [] for v in graph.vertex_ids}
    for a, b, s in graph.edges:
        if a == b:
            loop_signs[a].append(s)
        else:
            ends_count[a] += 1
            ends_count[b] += 1
    arrows: dict = {v: 0 for v in graph.vertex_ids}
    for _, base in graph.arrowheads:
        arrows[base] += 1
    profile = {}
    for v, e, g, b in graph.vertices:
        profile[v] = (e, g, b, ends_count[v], tuple(sorted(loop_signs[v])), arrows[v])
    return profile


def _pair_signs(graph: PlumbingGraph):
    pairs: dict = {}
    for a, b, s in graph.edges:
        if a != b:
            pairs.setdefault((a, b), []).append(s)
    return {k: tuple(sorted(v)) for k, v in pairs.items()}


def _signs_consistent(g1: PlumbingGraph, g2: PlumbingGraph, mapping: dict) -> bool:
    """Is there a flip assignment making the mapped edge signs agree?"""
    p1 = _pair_signs(g1)
    p2 = _pair_signs(g2)
    constraints = []
    for (a, b), signs in p1.items():
        fa, fb = mapping[a], mapping[b]
        other = p2.get((min(fa, fb), max(fa, fb)))
        if other is None or len(other) != len(signs):
            return False
        same = tuple(sorted(signs)) == other
        flipped = tuple(sorted(-s for s in signs)) == other
        if same and flipped:
            continue
        if same:
            constraints.append((a, b, 0))
        elif flipped:
            constraints.append((a, b, 1))
        else:
            return False
    parity: dict = {}
    adj: dict = {}
    for a, b, val in constraints:
        adj.setdefault(a, []).append((b, val))
        adj.setdefault(b, []).append((a, val))
    for start in adj:
        if start in parity:
            continue
        parity[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w, val in adj[v]:
                want = parity[v] ^ val
                if w not in parity:
                    parity[w] = want
                    queue.append(w)
                elif parity[w] != want:
                    return False
    return True


def _isomorphic(g1: PlumbingGraph, g2: PlumbingGraph) -> bool:
    ids1, ids2 = g1.vertex_ids, g2.vertex_ids
    if len(ids1) != len(ids2) or len(g1.edges) != len(g2.edges):
        return False
    prof1, prof2 = _vertex_profile(g1), _vertex_profile(g2)
    if sorted(prof1.values()) != sorted(prof2.values()):
        return False
    arrows1: dict = {}
    for lab, base in g1.arrowheads:
        arrows1.setdefault(base, []).append(lab)
    arrows2: dict = {}
    for lab, base in g2.arrowheads:
        arrows2.setdefault(base, []).append(lab)

    mult1 = {k: len(v) for k, v in _pair_signs(g1).items()}
    mult2 = {k: len(v) for k, v in _pair_signs(g2).items()}

    order = sorted(ids1, key=lambda v: (prof1[v], v))
    used: set = set()
    mapping: dict = {}

    def backtrack(k: int) -> bool:
        if k == len(order):
            return _signs_consistent(g1, g2, mapping)
        v = order[k]
        for w in ids2:
            if w in used or prof2[w] != prof1[v]:
                continue
            ok = True
            for a in mapping:
                m1 = mult1.get((min(a, v), max(a, v)), 0)
                m2 = mult2.get((min(mapping[a], w), max(mapping[a], w)), 0)
                if m1 != m2:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return backtrack(0)


def graphs_equivalent(g1: PlumbingGraph, g2: PlumbingGraph) -> bool:
    """Normalize both graphs, then search for a decorated isomorphism with
    flip-consistent edge signs.  Sound for the graphs produced here; not a
    complete decision procedure for plumbing equivalence."""
    n1 = normalize(g1)
    n2 = normalize(g2)
    if max(len(n1.vertices), len(n2.vertices)) > MAX_COMPARE_VERTICES:
        raise ValueError("graph too large to compare")
    return _isomorphic(n1, n2)


# ---------------------------------------------------------------------------
# text and DOT formats


def to_text(graph: PlumbingGraph) -> str:
    lines = []
    for v, e, g, b in graph.vertices:
        extra = f" b={b}" if b else ""
        lines.append(f"v{v} e={e} g={g}{extra}")
    for a, b, s in graph.edges:
        lines.append(f"v{a} -- v{b} {'+' if s == PLUS else '-'}")
    for lab, base in graph.arrowheads:
        lines.append(f"arrow b{lab} -> v{base}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> PlumbingGraph:
    vertices = []
    edges = []
    arrowheads = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0].startswith("v") and len(parts) >= 2 and parts[1].startswith("e="):
                vid = int(parts[0][1:])
                fields = {"g": 0, "b": 0}
                euler = None
                for item in parts[1:]:
                    key, _, value = item.partition("=")
                    if key == "e":
                        euler = int(value)
                    elif key in fields:
                        fields[key] = int(value)
                    else:
                        raise ValueError(f"unknown field {key!r}")
                if euler is None:
                    raise ValueError("missing Euler number")
                vertices.append((vid, euler, fields["g"], fields["b"]))
            elif len(parts) == 4 and parts[1] == "--":
                a = int(parts[0][1:])
                b = int(parts[2][1:])
                sign = {"+": PLUS, "-": MINUS}[parts[3]]
                edges.append((min(a, b), max(a, b), sign))
            elif len(parts) == 4 and parts[0] == "arrow" and parts[2] == "->":
                lab = int(parts[1][1:])
                base = int(parts[3][1:])
                arrowheads.append((lab, base))
            elif parts[0] == "m" and len(parts) == 5:
                continue
            else:
                raise ValueError("unrecognized line")
        except (ValueError, KeyError, IndexError) as exc:
            raise ValueError(f"cannot parse graph line {raw!r}: {exc}") from None
    return _rebuild(vertices, edges, arrowheads)


def to_dot(graph: PlumbingGraph) -> str:
    lines = ["graph plumbing {"]
    for v, e, g, b in graph.vertices:
        label = f"v{v} e={e}"
        if g:
            label += f" g={g}"
        if b:
            label += f" b={b}"
        lines.append(f'  v{v} [label="{label}"];')
    for a, b, s in graph.edges:
        style = "" if s == PLUS else ' [label="-"]'
        lines.append(f"  v{a} -- v{b}{style};")
    for lab, base in graph.arrowheads:
        lines.append(f'  arrow{lab} [shape=none, label="b{lab}"];')
        lines.append(f"  arrow{lab} -- v{base} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
