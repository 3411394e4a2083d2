"""Extremal graph families with explicit witness drawings.

Each generator returns the graph ``G`` together with a validated drawing of
the join of ``G`` with its small factor that attains the claimed class. The
drawings are assembled face by face with :class:`PlanarizationBuilder`;
nothing here is searched.

Vertex labels follow :func:`oneplanar.graphs.join`: the vertices of ``G``
come first, then the small factor's.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import bound_max_edges
from .drawing import Drawing, DrawingClass, DrawingError, drawing_class, validate_drawing
from .graphs import Graph, edgeless, join, path
from .planarization import PlanarizationBuilder


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyClaim:
    drawing_class: DrawingClass
    factor: str  # the small factor H of the join G+H the witness draws
    bound: str  # the edge bound the family attains
    bound_lhs: int
    bound_rhs: int

    @property
    def tight(self) -> bool:
        return self.bound_lhs == self.bound_rhs


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    join: Graph
    witness: Drawing
    claim: FamilyClaim
    base_drawing: Drawing | None = None  # a drawing of G alone, when the family has one


# Families defined only by figures; recorded as closed forms, not generated.
CHAIN_FAMILY_EDGES = "12k + 1"
CHAIN_FAMILY_VERTICES = "5k + 2"
CHAIN_FAMILY_DEGREES = {3: "3k + 1", 6: "k", 9: "k - 1", 4: "2"}
DENSE_C1_EXAMPLE = {"vertices": 27, "edges": 90}


def _checked(d: Drawing, expected: Graph, cls: DrawingClass) -> Drawing:
    problems = validate_drawing(d)
    if problems:
        raise DrawingError("; ".join(problems))
    if d.graph != expected:
        raise GeneratorError("constructed drawing is not of the intended graph")
    if drawing_class(d) is not cls:
        raise GeneratorError(f"constructed drawing is {drawing_class(d).label}, not {cls.label}")
    return d


def _cycle(b: PlanarizationBuilder, labels: list[int]) -> None:
    for v in labels:
        b.add_vertex(v)
    b.new_edge(labels[0], labels[1], _e(labels[0], labels[1]), None, None)
    for u, v in zip(labels[1:], labels[2:]):
        b.new_edge(u, v, _e(u, v), b.rot[u][0], None)
    u, v = labels[-1], labels[0]
    b.new_edge(u, v, _e(u, v), b.rot[u][0], b.rot[v][0])


def _e(u: int, v: int) -> tuple[int, int]:
    return (min(u, v), max(u, v))


def _fan(b: PlanarizationBuilder, apex: int, targets: list[int], face: tuple[int, int]) -> None:
    """Join a new vertex to ``targets`` in order, inside the face left of dart ``face``."""
    b.add_vertex(apex)
    b.add_edge(apex, targets[0], face=face)
    for t in targets[1:]:
        b.add_edge(apex, t)


def _two_chord_cycle(k: int) -> PlanarizationBuilder:
    """C_k with apexes k (inside) and k+1 (outside); chords v1v3, v4v6 crossed."""
    v = list(range(k))  # v[i] is v_{i+1}
    b = PlanarizationBuilder()
    _cycle(b, v)
    inner, outer = k, k + 1
    _fan(b, inner, v, face=(v[0], v[1]))
    _fan(b, outer, v, face=(v[1], v[0]))
    b.cross(v[0], v[2], (inner, v[1]))
    b.cross(v[3], v[5], (outer, v[4]))
    return b


def _cycle_graph_with(k: int, chords, drop=()) -> Graph:
    edges = {_e(i, (i + 1) % k) for i in range(k)} | {_e(*c) for c in chords}
    return Graph.from_edges(k, edges - {_e(*d) for d in drop})


def gen_cycle_two_chords(k: int) -> FamilyInstance:
    """G_k: a k-cycle with chords v1v3 and v4v6, drawn with 2P_1 as a C0-drawing."""
    if k < 6:
        raise GeneratorError("needs k >= 6")
    g = _cycle_graph_with(k, [(0, 2), (3, 5)])
    host = join(g, edgeless(2))
    d = _checked(_two_chord_cycle(k).freeze(k + 2), host, DrawingClass.C0)
    claim = FamilyClaim(DrawingClass.C0, "2P1", "|E| <= |V| + 2", g.m, g.n + 2)
    return FamilyInstance(g, host, d, claim)


def gen_cycle_two_chords_minus(k: int) -> FamilyInstance:
    """G_k minus v3v4, drawn with P_2 as a C0-drawing.

    The apex-apex edge runs through the face opened up by deleting v3v4.
    """
    if k < 6:
        raise GeneratorError("needs k >= 6")
    g = _cycle_graph_with(k, [(0, 2), (3, 5)], drop=[(2, 3)])
    host = join(g, path(2))
    b = _two_chord_cycle(k)
    b.remove_edge(b.edge_between(2, 3))
    b.add_edge(k, k + 1)
    d = _checked(b.freeze(k + 2), host, DrawingClass.C0)
    claim = FamilyClaim(DrawingClass.C0, "P2", "|E| <= |V| + 1", g.m, g.n + 1)
    return FamilyInstance(g, host, d, claim)


def ladder_graph(k: int) -> Graph:
    """The ladder-like graph on 2k - 1 vertices: a_i is i - 1, b_i is k + i - 1."""
    a = lambda i: i - 1  # noqa: E731
    bb = lambda i: k + i - 1  # noqa: E731
    edges = set()
    edges |= {_e(a(i), a(i + 1)) for i in range(1, k)}
    edges |= {_e(bb(i), bb(i + 1)) for i in range(1, k - 1)}
    for i in range(1, k):
        edges |= {_e(a(i), bb(i)), _e(a(i + 1), bb(i))}
    edges.add(_e(a(k - 2), a(k)))
    edges |= {_e(bb(j), a(j - 1)) for j in range(2, k - 1, 2)}
    return Graph.from_edges(2 * k - 1, edges)


def _ladder_drawing(k: int) -> PlanarizationBuilder:
    a = lambda i: i - 1  # noqa: E731
    bb = lambda i: k + i - 1  # noqa: E731
    b = PlanarizationBuilder()
    boundary = [a(i) for i in range(1, k + 1)] + [bb(i) for i in range(k - 1, 0, -1)]
    _cycle(b, boundary)
    kites = [i for i in range(1, k - 2) if i % 2 == 1]
    # Triangulate the strip left to right, leaving each kite quad open.
    for i in range(1, k):
        right = (a(i + 1), a(i + 2)) if i + 1 < k else None
        if i not in kites and i < k - 1:
            b.add_edge(a(i + 1), bb(i), face=(a(i), a(i + 1)))
        if i + 1 <= k - 1:
            b.add_edge(a(i + 1), bb(i + 1), face=right)
    for i in kites:
        b.add_edge(a(i + 1), bb(i), face=(a(i), a(i + 1)))
        b.cross(a(i), bb(i + 1), (a(i + 1), bb(i)))
    b.add_edge(a(k - 2), a(k), face=(a(k), a(k - 1)))
    return b


def gen_ladderlike_c0_p1(k: int) -> FamilyInstance:
    """G_{2k-1} and a C0-drawing of G_{2k-1} + P_1 meeting 4|E| = 9|V| - 11."""
    if k < 4 or k % 2:
        raise GeneratorError("needs even k >= 4")
    a = lambda i: i - 1  # noqa: E731
    bb = lambda i: k + i - 1  # noqa: E731
    g = ladder_graph(k)
    b = _ladder_drawing(k)
    base = _checked(b.freeze(g.n), g, DrawingClass.C0)
    # Apex outside, fanned along the outer boundary; a_{k-1} is reached across b_{k-1}a_k.
    v = g.n
    around = [a(1)] + [bb(i) for i in range(1, k)] + [a(k)] + [a(i) for i in range(k - 2, 1, -1)]
    _fan(b, v, around, face=(a(1), bb(1)))
    b.cross(v, a(k - 1), (bb(k - 1), a(k)))
    host = join(g, path(1))
    d = _checked(b.freeze(g.n + 1), host, DrawingClass.C0)
    claim = FamilyClaim(DrawingClass.C0, "P1", "4|E| <= 9|V| - 11", 4 * g.m, 9 * g.n - 11)
    return FamilyInstance(g, host, d, claim, base_drawing=base)


def gen_4l_cycle_c1(ell: int) -> FamilyInstance:
    """A 4l-cycle with 2l chords whose join with 2P_1 has a C1-drawing but no C0-drawing."""
    if ell < 2:
        raise GeneratorError("needs l >= 2")
    n = 4 * ell
    v = lambda i: (i - 1) % n  # noqa: E731  v_i, indices mod 4l
    inner = [(v(4 * j - 2), v(4 * j)) for j in range(1, ell + 1)]
    outer = [(v(4 * j), v(4 * j + 2)) for j in range(1, ell)] + [(v(4 * ell), v(2))]
    g = _cycle_graph_with(n, inner + outer)
    host = join(g, edgeless(2))
    b = PlanarizationBuilder()
    cycle_labels = list(range(n))
    _cycle(b, cycle_labels)
    ai, ao = n, n + 1
    _fan(b, ai, cycle_labels, face=(v(1), v(2)))
    _fan(b, ao, cycle_labels, face=(v(2), v(1)))
    for j in range(1, ell + 1):
        b.cross(v(4 * j - 2), v(4 * j), (ai, v(4 * j - 1)))
    for j in range(1, ell + 1):
        b.cross(v(4 * j), v(4 * j + 2), (ao, v(4 * j + 1)))
    d = _checked(b.freeze(n + 2), host, DrawingClass.C1)
    claim = FamilyClaim(DrawingClass.C1, "2P1", "5|E| <= 8|V|", 5 * g.m, 8 * g.n)
    return FamilyInstance(g, host, d, claim)


def join_excludes_c0_by_edges(inst: FamilyInstance) -> bool:
    """True when the join has more edges than any C0-drawable graph of its order."""
    return Fraction(inst.join.m) > bound_max_edges(inst.join.n, DrawingClass.C0)


GENERATORS = {
    "cycle-two-chords": gen_cycle_two_chords,
    "cycle-two-chords-minus": gen_cycle_two_chords_minus,
    "ladderlike": gen_ladderlike_c0_p1,
    "4l-cycle": gen_4l_cycle_c1,
}
