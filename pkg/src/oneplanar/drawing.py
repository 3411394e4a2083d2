"""1-planar drawings stored as planarizations.

A :class:`Drawing` of a graph on ``n`` vertices with ``k`` crossings is a
rotation system on ``n + k`` vertices: ``0..n-1`` are the true vertices and
``n + i`` is the false vertex where the two edges of ``crossings[i]`` meet.
Every planarization edge records the graph edge it is a piece of.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .graphs import Edge, Graph, edge
from .rotation import RotationSystem, is_planar_embedding

Pair = tuple[Edge, Edge]


class CrossingSpecError(ValueError):
    pass


class DrawingError(ValueError):
    pass


class DrawingClass(enum.IntEnum):
    C0 = 0
    C1 = 1
    C2 = 2
    UNNORMALIZED = 3

    @property
    def label(self) -> str:
        return "Unnormalized" if self is DrawingClass.UNNORMALIZED else f"{self.name}-drawing"

    @classmethod
    def from_overlap(cls, overlap: int) -> DrawingClass:
        return cls(min(overlap, 3))


def normalize_pair(e1: tuple[int, int], e2: tuple[int, int]) -> Pair:
    a, b = edge(*e1), edge(*e2)
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class CrossingSpec:
    """Unordered pairs of edges that cross; stored sorted."""

    pairs: tuple[Pair, ...] = ()

    @classmethod
    def of(cls, pairs) -> CrossingSpec:
        return cls(tuple(sorted(normalize_pair(e1, e2) for e1, e2 in pairs)))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def neighborhoods(self) -> list[frozenset[int]]:
        return [frozenset(a + b) for a, b in self.pairs]


def spec_problems(g: Graph, spec: CrossingSpec, *, relaxed: bool = False) -> list[str]:
    """Violations of the crossing-spec rules; ``relaxed`` admits adjacent crossings."""
    out = []
    used: Counter[Edge] = Counter()
    for a, b in spec.pairs:
        for e in (a, b):
            if e not in g.edge_set:
                out.append(f"{e} is not an edge of the graph")
            used[e] += 1
        if a == b:
            out.append(f"edge {a} paired with itself")
            continue
        shared = set(a) & set(b)
        if shared and not relaxed:
            out.append(f"crossing edges {a} and {b} share endpoint {min(shared)}")
    for e, c in sorted(used.items()):
        if c > 1:
            out.append(f"edge {e} is crossed {c} times")
    if list(spec.pairs) != sorted(normalize_pair(a, b) for a, b in spec.pairs):
        out.append("crossing pairs are not in canonical order")
    return out


def check_spec(g: Graph, spec: CrossingSpec, *, relaxed: bool = False) -> None:
    problems = spec_problems(g, spec, relaxed=relaxed)
    if problems:
        raise CrossingSpecError("; ".join(problems))


def max_overlap(spec: CrossingSpec) -> int:
    hoods = spec.neighborhoods()
    return max((len(x & y) for x, y in combinations(hoods, 2)), default=0)


def spec_overlap_class(spec: CrossingSpec, g: Graph | None = None) -> tuple[int, DrawingClass]:
    """Largest pairwise overlap of crossing neighbourhoods and the implied class."""
    if g is not None:
        check_spec(g, spec)
    else:
        for a, b in spec.pairs:
            if len(set(a + b)) != 4:
                raise CrossingSpecError(f"crossing edges {a} and {b} share an endpoint")
        flat = [e for p in spec.pairs for e in p]
        if len(flat) != len(set(flat)):
            raise CrossingSpecError("an edge occurs in two crossing pairs")
    overlap = max_overlap(spec)
    return overlap, DrawingClass.from_overlap(overlap)


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    spec: CrossingSpec
    planarization: RotationSystem
    owner: tuple[Edge, ...]  # graph edge carried by each planarization edge

    def __post_init__(self) -> None:
        if len(self.owner) != len(self.planarization.edges):
            raise DrawingError("owner map does not cover every planarization edge")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def crossings(self) -> int:
        return len(self.spec)

    def false_vertex(self, i: int) -> int:
        return self.graph.n + i

    def is_false(self, v: int) -> bool:
        return v >= self.graph.n

    def false_neighborhood(self, i: int) -> frozenset[int]:
        return frozenset(self.planarization.neighbors(self.false_vertex(i)))


def validate_drawing(d: Drawing, *, relaxed: bool = False) -> list[str]:
    """Every violated drawing invariant, as messages; empty means valid."""
    g, r = d.graph, d.planarization
    out = [f"crossing spec: {p}" for p in spec_problems(g, d.spec, relaxed=relaxed)]
    structural = r.problems()
    if structural:
        return out + [f"rotation: {p}" for p in structural]
    k = len(d.spec)
    expected = set(range(g.n + k))
    if set(r.rotation) != expected:
        out.append(f"planarization vertices {sorted(r.rotation)} != 0..{g.n + k - 1}")
        return out
    for i, own in enumerate(d.owner):
        if own not in g.edge_set:
            out.append(f"planarization edge {i} carries non-edge {own}")
    if out:
        return out

    pieces: Counter[Edge] = Counter()
    for i, (u, v) in enumerate(r.edges):
        own = d.owner[i]
        fu, fv = d.is_false(u), d.is_false(v)
        if fu and fv:
            out.append("false vertices adjacent")
        elif not fu and not fv:
            if edge(u, v) != own:
                out.append(f"planarization edge {(u, v)} labelled as piece of {own}")
            pieces[own] += 2
        else:
            t = v if fu else u
            if t not in own:
                out.append(f"segment to {t} labelled as piece of {own}")
            pieces[own] += 1
    crossed = {e for p in d.spec.pairs for e in p}
    for e in g.edges:
        if pieces[e] != 2:
            out.append(f"edge {e} is drawn {pieces[e] / 2:g} times")
    for e, (u, v) in zip(d.owner, r.edges):
        if not d.is_false(u) and not d.is_false(v) and e in crossed:
            out.append(f"crossed edge {e} also drawn uncrossed")
    for i, (a, b) in enumerate(d.spec.pairs):
        c = d.false_vertex(i)
        ds = r.rotation[c]
        if len(ds) != 4:
            out.append(f"false vertex {c} has degree {len(ds)}")
            continue
        owners = [d.owner[x >> 1] for x in ds]
        heads = [r.head(x) for x in ds]
        if Counter(owners) != Counter({a: 2, b: 2}):
            out.append(f"false vertex {c} does not join the segments of {a} and {b}")
            continue
        if owners[0] == owners[1] or owners[1] == owners[2]:
            out.append(f"rotation at false vertex {c} does not alternate")
        for e in (a, b):
            ends = sorted(h for h, o in zip(heads, owners) if o == e)
            if ends != sorted(e):
                out.append(f"segments of {e} at {c} reach {ends}")
        if not relaxed and len(set(heads)) != 4:
            out.append(f"false vertex {c} has repeated neighbours {heads}")
    if not is_planar_embedding(r):
        out.append("planarization is not plane (genus > 0)")
    return out


def is_valid(d: Drawing, *, relaxed: bool = False) -> bool:
    return not validate_drawing(d, relaxed=relaxed)


def drawing_class(d: Drawing) -> DrawingClass:
    problems = validate_drawing(d)
    if problems:
        raise DrawingError("; ".join(problems))
    return spec_overlap_class(d.spec)[1]
