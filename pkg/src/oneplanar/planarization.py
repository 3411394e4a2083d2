"""Mutable planarization used to build and rewrite drawings.

True vertices are ints (their final labels); false vertices are ``("x", j)``
tuples until :meth:`PlanarizationBuilder.freeze` renumbers them after the
true vertices in crossing-pair order.
"""

from __future__ import annotations

from collections.abc import Hashable

from .drawing import CrossingSpec, Drawing, DrawingError, normalize_pair, validate_drawing
from .graphs import Edge, Graph, edge
from .rotation import RotationSystem

Vertex = Hashable


class BuildError(ValueError):
    pass


def _is_false(v: Vertex) -> bool:
    return isinstance(v, tuple)


class PlanarizationBuilder:
    def __init__(self) -> None:
        self.rot: dict[Vertex, list[int]] = {}
        self.ends: list[tuple[Vertex, Vertex]] = []  # per edge
        self.owner: list[Edge | None] = []
        self.alive: list[bool] = []
        self._false_counter = 0

    # -- construction from / to frozen drawings --------------------------

    @classmethod
    def from_drawing(cls, d: Drawing) -> PlanarizationBuilder:
        b = cls()
        name = {v: v for v in range(d.n)}
        for i in range(d.crossings):
            name[d.n + i] = b._new_false_id()
        for v in sorted(d.planarization.rotation):
            b.rot[name[v]] = list(d.planarization.rotation[v])
        for (u, v), own in zip(d.planarization.edges, d.owner):
            b.ends.append((name[u], name[v]))
            b.owner.append(own)
            b.alive.append(True)
        return b

    def freeze(self, n: int | None = None) -> Drawing:
        true = sorted(v for v in self.rot if not _is_false(v))
        if n is None:
            n = len(true)
        if true != list(range(n)):
            raise BuildError(f"true vertices must be 0..{n - 1}, got {true}")
        base = {self.owner[e] for e in self._alive_edges()}
        pair_of: dict[Vertex, tuple[Edge, Edge]] = {}
        for v in self.rot:
            if _is_false(v):
                owners = sorted({self.owner[d >> 1] for d in self.rot[v]})
                if len(owners) != 2:
                    raise BuildError(f"false vertex {v} carries {len(owners)} edges")
                pair_of[v] = normalize_pair(*owners)
        falses = sorted(pair_of, key=lambda v: pair_of[v])
        label = {v: v for v in true}
        label.update({v: n + i for i, v in enumerate(falses)})
        spec = CrossingSpec(tuple(pair_of[v] for v in falses))
        if len(set(spec.pairs)) != len(spec.pairs):
            raise BuildError("two false vertices carry the same crossing pair")

        def key(e: int):
            u, v = label[self.ends[e][0]], label[self.ends[e][1]]
            return (min(u, v), max(u, v), self.owner[e], e)

        order = sorted(self._alive_edges(), key=key)
        new_index = {e: i for i, e in enumerate(order)}
        edges = tuple((label[self.ends[e][0]], label[self.ends[e][1]]) for e in order)
        rotation = {
            label[v]: tuple(2 * new_index[d >> 1] + (d & 1) for d in ds)
            for v, ds in sorted(self.rot.items(), key=lambda kv: label[kv[0]])
        }
        planarization = RotationSystem(edges, rotation)
        try:
            graph = Graph.from_edges(n, base)
        except ValueError as exc:
            raise BuildError(str(exc)) from exc
        return Drawing(graph, spec, planarization, tuple(self.owner[e] for e in order))

    # -- primitive edits --------------------------------------------------

    def _new_false_id(self) -> Vertex:
        self._false_counter += 1
        return ("x", self._false_counter)

    def _alive_edges(self) -> list[int]:
        return [e for e, ok in enumerate(self.alive) if ok]

    def tail(self, d: int) -> Vertex:
        return self.ends[d >> 1][d & 1]

    def head(self, d: int) -> Vertex:
        return self.ends[d >> 1][1 - (d & 1)]

    def add_vertex(self, v: Vertex | None = None) -> Vertex:
        if v is None:
            v = self._new_false_id()
        if v in self.rot:
            raise BuildError(f"vertex {v} exists")
        self.rot[v] = []
        return v

    def next_at_tail(self, d: int) -> int:
        ds = self.rot[self.tail(d)]
        return ds[(ds.index(d) + 1) % len(ds)]

    def prev_dart(self, d: int) -> int:
        ds = self.rot[self.tail(d)]
        return ds[(ds.index(d) - 1) % len(ds)]

    def face_successor(self, d: int) -> int:
        return self.next_at_tail(d ^ 1)

    def faces(self) -> list[list[int]]:
        darts = [d for e in self._alive_edges() for d in (2 * e, 2 * e + 1)]
        seen = set()
        out = []
        for start in darts:
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                d = self.face_successor(d)
            out.append(face)
        return out

    def new_edge(
        self, u: Vertex, v: Vertex, owner: Edge, after_u: int | None, after_v: int | None
    ) -> int:
        """Add edge u-v, its darts placed right after the given darts (or alone)."""
        e = len(self.ends)
        self.ends.append((u, v))
        self.owner.append(owner)
        self.alive.append(True)
        for x, dart, after in ((u, 2 * e, after_u), (v, 2 * e + 1, after_v)):
            ds = self.rot[x]
            if after is None:
                if ds:
                    raise BuildError(f"vertex {x} is not isolated; a corner is needed")
                ds.append(dart)
            else:
                ds.insert(ds.index(after) + 1, dart)
        return e

    def remove_edge(self, e: int) -> None:
        if not self.alive[e]:
            raise BuildError(f"edge {e} already removed")
        u, v = self.ends[e]
        self.rot[u].remove(2 * e)
        self.rot[v].remove(2 * e + 1)
        self.alive[e] = False

    def remove_vertex(self, v: Vertex) -> None:
        for d in list(self.rot[v]):
            self.remove_edge(d >> 1)
        del self.rot[v]

    def dart(self, u: Vertex, v: Vertex) -> int:
        """The unique live dart u->v."""
        found = [d for d in self.rot[u] if self.head(d) == v]
        if len(found) != 1:
            raise BuildError(f"{len(found)} darts from {u} to {v}")
        return found[0]

    def edge_between(self, u: Vertex, v: Vertex) -> int:
        return self.dart(u, v) >> 1

    def corner_in_face(self, face: list[int], v: Vertex) -> int | None:
        """Dart to insert after at ``v`` for a new edge drawn inside ``face``."""
        if not self.rot[v]:
            return None
        for d in face:
            if self.head(d) == v:
                return d ^ 1
        raise BuildError(f"vertex {v} is not on the face")

    def face_containing(self, u: Vertex, v: Vertex) -> list[int]:
        return self.face_of_dart(self.dart(u, v))

    def face_of_dart(self, d: int) -> list[int]:
        face = [d]
        x = self.face_successor(d)
        while x != d:
            face.append(x)
            x = self.face_successor(x)
        return face

    def face_vertices(self, face: list[int]) -> set[Vertex]:
        return {self.tail(d) for d in face}

    # -- composite edits --------------------------------------------------

    def add_edge_in_face(self, u: Vertex, v: Vertex, face: list[int], owner: Edge | None = None) -> int:
        if owner is None:
            owner = edge(u, v)
        return self.new_edge(u, v, owner, self.corner_in_face(face, u), self.corner_in_face(face, v))

    def add_edge(self, u: Vertex, v: Vertex, *, face: tuple[Vertex, Vertex] | None = None) -> int:
        """Add the true edge u-v inside the face left of dart ``face`` (or the unique face holding both)."""
        if face is not None:
            f = self.face_containing(*face)
        else:
            candidates = [
                f for f in self.faces() if {u, v} <= self.face_vertices(f) or self._fits(f, u, v)
            ]
            if len(candidates) != 1:
                raise BuildError(f"{len(candidates)} faces hold both {u} and {v}; name one")
            f = candidates[0]
        return self.add_edge_in_face(u, v, f)

    def _fits(self, f: list[int], u: Vertex, v: Vertex) -> bool:
        verts = self.face_vertices(f)
        return all(x in verts or not self.rot[x] for x in (u, v))

    def subdivide(self, e: int) -> Vertex:
        """Split edge ``e`` with a new false vertex; both halves keep the owner."""
        u, v = self.ends[e]
        c = self.add_vertex()
        f = len(self.ends)
        self.ends.append((c, v))
        self.owner.append(self.owner[e])
        self.alive.append(True)
        at_v = self.rot[v]
        at_v[at_v.index(2 * e + 1)] = 2 * f + 1
        self.ends[e] = (u, c)
        self.rot[c] = [2 * e + 1, 2 * f]
        return c

    def cross(self, u: Vertex, w: Vertex, crossed: tuple[Vertex, Vertex]) -> Vertex:
        """Draw true edge u-w through the middle of the true edge ``crossed``."""
        p, q = crossed
        c = self.subdivide(self.edge_between(p, q))
        side_a = self.face_of_dart(self.dart(p, c))  # corner c->q ... after p->c
        side_b = self.face_of_dart(self.dart(q, c))
        va, vb = self.face_vertices(side_a), self.face_vertices(side_b)
        if u in va and w in vb:
            first, second = (u, p, side_a), (w, q, side_b)
        elif w in va and u in vb:
            first, second = (w, p, side_a), (u, q, side_b)
        else:
            raise BuildError(f"{u} and {w} are not on opposite sides of {crossed}")
        own = edge(u, w)
        x, near, f = first
        self.new_edge(c, x, own, self.dart(c, near), self.corner_in_face(f, x))
        x, near, _ = second
        f = self.face_of_dart(self.dart(near, c))
        self.new_edge(c, x, own, self.dart(c, near), self.corner_in_face(f, x))
        return c

    def splice(self, c: Vertex, d1: int, d2: int, owner: Edge) -> int:
        """Join the far ends of darts ``c->a`` and ``c->b`` into a new edge a-b.

        The new darts take the places of ``a->c`` and ``b->c``; the old edges
        are removed. Used to smooth degree-2 vertices and uncross crossings.
        """
        a, b = self.head(d1), self.head(d2)
        ra, rb = d1 ^ 1, d2 ^ 1
        e = len(self.ends)
        self.ends.append((a, b))
        self.owner.append(owner)
        self.alive.append(True)
        at_a = self.rot[a]
        at_a[at_a.index(ra)] = 2 * e
        at_b = self.rot[b]
        at_b[at_b.index(rb)] = 2 * e + 1
        for d in (d1, d2):
            self.rot[c].remove(d)
            self.alive[d >> 1] = False
        return e

    def false_vertices(self) -> list[Vertex]:
        return [v for v in self.rot if _is_false(v)]


def check_frozen(d: Drawing, *, relaxed: bool = False) -> Drawing:
    problems = validate_drawing(d, relaxed=relaxed)
    if problems:
        raise DrawingError("; ".join(problems))
    return d
