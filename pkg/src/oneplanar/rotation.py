"""Dart-based rotation systems (multigraph tolerant) and face tracing.

Edge ``i`` owns darts ``2i`` (``edges[i][0] -> edges[i][1]``) and ``2i + 1``
(the reverse), so ``d ^ 1`` is always the reverse of ``d``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property


class RotationError(ValueError):
    pass


def rev(d: int) -> int:
    return d ^ 1


@dataclass(frozen=True, eq=True)
class RotationSystem:
    edges: tuple[tuple[int, int], ...]
    rotation: Mapping[int, tuple[int, ...]]

    def tail(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    def head(self, d: int) -> int:
        return self.edges[d >> 1][1 - (d & 1)]

    @property
    def vertices(self) -> list[int]:
        return sorted(self.rotation)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.edges)

    @cached_property
    def _position(self) -> dict[int, int]:
        return {d: i for ds in self.rotation.values() for i, d in enumerate(ds)}

    def next_at_tail(self, d: int) -> int:
        """Successor of ``d`` in the cyclic order around its tail."""
        ds = self.rotation[self.tail(d)]
        return ds[(self._position[d] + 1) % len(ds)]

    def prev_at_tail(self, d: int) -> int:
        ds = self.rotation[self.tail(d)]
        return ds[(self._position[d] - 1) % len(ds)]

    def face_successor(self, d: int) -> int:
        return self.next_at_tail(rev(d))

    def neighbors(self, v: int) -> list[int]:
        return [self.head(d) for d in self.rotation[v]]

    def problems(self) -> list[str]:
        out = []
        seen: dict[int, int] = {}
        for v, ds in self.rotation.items():
            for d in ds:
                if not 0 <= d < self.num_darts:
                    out.append(f"dart {d} at vertex {v} does not exist")
                    continue
                if d in seen:
                    out.append(f"dart {d} listed twice")
                seen[d] = v
                if self.tail(d) != v:
                    out.append(f"dart {d} listed at {v} but starts at {self.tail(d)}")
        for d in range(self.num_darts):
            if d not in seen:
                out.append(f"dart {d} missing from the rotation at {self.tail(d)}")
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                out.append(f"edge {i} is a loop at {u}")
            for x in (u, v):
                if x not in self.rotation:
                    out.append(f"edge {i} ends at unknown vertex {x}")
        return out

    def validate(self) -> None:
        problems = self.problems()
        if problems:
            raise RotationError("; ".join(problems))


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[int, ...], ...]
    V: int
    E: int
    F: int
    components: int
    isolated: int

    @property
    def genus(self) -> int:
        # Each isolated vertex is a sphere contributing one face of its own.
        chi_total = self.V - self.E + self.F + self.isolated
        return (2 * self.components - chi_total) // 2

    @property
    def face_lengths(self) -> list[int]:
        return [len(f) for f in self.faces]


def _components(r: RotationSystem) -> list[set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in r.rotation}
    for u, v in r.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[int] = set()
    comps = []
    for v in sorted(adj):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def trace_faces(r: RotationSystem) -> FaceSet:
    """Trace all faces; each face starts at its smallest dart."""
    r.validate()
    visited = [False] * r.num_darts
    faces = []
    for start in range(r.num_darts):
        if visited[start]:
            continue
        face = []
        d = start
        while not visited[d]:
            visited[d] = True
            face.append(d)
            d = r.face_successor(d)
        faces.append(tuple(face))
    isolated = sum(1 for ds in r.rotation.values() if not ds)
    return FaceSet(
        faces=tuple(faces),
        V=len(r.rotation),
        E=len(r.edges),
        F=len(faces),
        components=len(_components(r)),
        isolated=isolated,
    )


def component_genera(r: RotationSystem) -> list[int]:
    fs = trace_faces(r)
    comp_of = {}
    for i, comp in enumerate(_components(r)):
        for v in comp:
            comp_of[v] = i
    count = len(set(comp_of.values()))
    V = [0] * count
    E = [0] * count
    F = [0] * count
    for v, ds in r.rotation.items():
        V[comp_of[v]] += 1
        if not ds:
            F[comp_of[v]] += 1
    for u, _ in r.edges:
        E[comp_of[u]] += 1
    for face in fs.faces:
        F[comp_of[r.tail(face[0])]] += 1
    return [(2 - (V[i] - E[i] + F[i])) // 2 for i in range(count)]


def is_planar_embedding(r: RotationSystem) -> bool:
    return all(g == 0 for g in component_genera(r))


def from_neighbor_lists(lists: Mapping[int, list[int]]) -> RotationSystem:
    """Build a rotation system from cyclic neighbour lists.

    For parallel edges the i-th occurrence of ``w`` in the list of ``v`` is
    paired with the i-th occurrence of ``v`` in the list of ``w``.
    """
    occurrences: dict[tuple[int, int], list[int]] = {}
    for v, nbrs in lists.items():
        for pos, w in enumerate(nbrs):
            if w not in lists:
                raise RotationError(f"neighbour {w} of {v} is not a vertex")
            if w == v:
                raise RotationError(f"loop at {v}")
            occurrences.setdefault((v, w), []).append(pos)
    edges: list[tuple[int, int]] = []
    dart_at: dict[tuple[int, int], int] = {}
    for (v, w), poss in sorted(occurrences.items()):
        if v > w:
            continue
        back = occurrences.get((w, v), [])
        if len(back) != len(poss):
            raise RotationError(f"{v} lists {w} {len(poss)} times but {w} lists {v} {len(back)} times")
        for p, q in zip(poss, back):
            i = len(edges)
            edges.append((v, w))
            dart_at[(v, p)] = 2 * i
            dart_at[(w, q)] = 2 * i + 1
    for (v, w), poss in occurrences.items():
        if (w, v) not in occurrences:
            raise RotationError(f"{v} lists {w} but {w} does not list {v}")
    rotation = {v: tuple(dart_at[(v, p)] for p in range(len(nbrs))) for v, nbrs in lists.items()}
    return RotationSystem(tuple(edges), rotation)
