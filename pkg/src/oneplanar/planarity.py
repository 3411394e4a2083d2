"""Planarity testing with embedding extraction for multigraphs.

The verdict and the embedding of the underlying simple graph come from the
left-right algorithm in networkx; parallel copies are then laid beside their
first copy so that consecutive copies bound digon faces.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import networkx as nx

from .drawing import CrossingSpec, Drawing, check_spec
from .graphs import Edge, Graph
from .rotation import RotationSystem, rev


def _simple_graph(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(sorted(vertices))
    g.add_edges_from(edges)
    return g


def is_planar_graph(vertices: Iterable[int], edges: Sequence[tuple[int, int]]) -> bool:
    vertices = list(vertices)
    simple = {(min(u, v), max(u, v)) for u, v in edges}
    if len(vertices) >= 3 and len(simple) > 3 * len(vertices) - 6:
        return False
    planar, _ = nx.check_planarity(_simple_graph(vertices, sorted(simple)))
    return planar


def find_planar_embedding(
    vertices: Iterable[int], edges: Sequence[tuple[int, int]]
) -> RotationSystem | None:
    """Return a genus-0 rotation system of the multigraph, or ``None``.

    Edge ``i`` of the result is ``edges[i]`` as given. Loops are rejected.
    """
    vertices = sorted(set(vertices))
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at {u}")
    first_copy: dict[tuple[int, int], int] = {}
    for i, (u, v) in enumerate(edges):
        first_copy.setdefault((min(u, v), max(u, v)), i)
    simple = sorted(first_copy)
    if len(vertices) >= 3 and len(simple) > 3 * len(vertices) - 6:
        return None
    planar, emb = nx.check_planarity(_simple_graph(vertices, simple))
    if not planar:
        return None

    def dart(u: int, v: int) -> int:
        i = first_copy[(min(u, v), max(u, v))]
        return 2 * i if edges[i][0] == u else 2 * i + 1

    rotation = {v: [dart(v, w) for w in emb.neighbors_cw_order(v)] for v in vertices}
    for i, (u, v) in enumerate(edges):
        base = dart(u, v)
        if base >> 1 == i:
            continue
        # New copy u->v goes right before the base dart at u and its reverse
        # right after rev(base) at v, closing a digon with the base edge.
        at_u = rotation[u]
        at_u.insert(at_u.index(base), 2 * i)
        at_v = rotation[v]
        at_v.insert(at_v.index(rev(base)) + 1, 2 * i + 1)
    return RotationSystem(tuple(edges), {v: tuple(ds) for v, ds in rotation.items()})


def planarization_edges(
    g: Graph, spec: CrossingSpec
) -> tuple[list[tuple[int, int]], list[Edge], list[tuple[int, int]]]:
    """Planarization edges with their owners, plus the rim edges of the wheel gadgets.

    Each crossing of ``uv`` and ``xz`` becomes a hub ``c`` with spokes to
    ``u, x, v, z``; the rim ``u-x-v-z-u`` makes the wheel 3-connected, so any
    plane embedding of the gadget graph has the alternating rotation at ``c``.
    """
    crossed = {e for p in spec.pairs for e in p}
    edges: list[tuple[int, int]] = []
    owner: list[Edge] = []
    for e in g.edges:
        if e not in crossed:
            edges.append(e)
            owner.append(e)
    rims = []
    for i, ((u, v), (x, z)) in enumerate(spec.pairs):
        c = g.n + i
        for t, own in ((u, (u, v)), (v, (u, v)), (x, (x, z)), (z, (x, z))):
            edges.append((c, t))
            owner.append(own)
        rims += [(u, x), (x, v), (v, z), (z, u)]
    return edges, owner, rims


def realize_crossing_spec(g: Graph, spec: CrossingSpec) -> Drawing | None:
    """A drawing of ``g`` whose crossings are exactly ``spec``, if one exists.

    Raises :class:`CrossingSpecError` when ``spec`` itself is malformed.
    """
    check_spec(g, spec)
    edges, owner, rims = planarization_edges(g, spec)
    present = {(min(u, v), max(u, v)) for u, v in edges}
    extra = []
    for u, v in rims:
        key = (min(u, v), max(u, v))
        if key not in present:
            present.add(key)
            extra.append(key)
    vertices = range(g.n + len(spec))
    emb = find_planar_embedding(vertices, edges + extra)
    if emb is None:
        return None
    limit = 2 * len(edges)
    rotation = {v: tuple(d for d in ds if d < limit) for v, ds in emb.rotation.items()}
    return Drawing(g, spec, RotationSystem(tuple(edges), rotation), tuple(owner))
