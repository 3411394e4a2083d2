"""Simple undirected graphs, the named small graphs, joins and subgraph tests."""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph data or invalid family parameters."""


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``; ``edges`` is sorted with ``u < v``."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not normalized")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges not sorted")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            normalized.add(edge(u, v))
        return cls(n, tuple(sorted(normalized)))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edge_set

    def relabel(self, offset: int) -> list[Edge]:
        return [(u + offset, v + offset) for u, v in self.edges]


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def join(g: Graph, h: Graph) -> Graph:
    """``g + h``; the vertices of ``h`` are shifted by ``g.n``."""
    edges = list(g.edges) + h.relabel(g.n)
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph.from_edges(g.n + h.n, list(g.edges) + h.relabel(g.n))


def edgeless(n: int) -> Graph:
    return Graph(n, ())


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("P_n needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("C_n needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("K_n needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("every part of a complete multipartite graph needs >= 1 vertex")
    labels = []
    for i, p in enumerate(parts):
        labels += [i] * p
    n = len(labels)
    return Graph.from_edges(
        n, [(u, v) for u, v in combinations(range(n), 2) if labels[u] != labels[v]]
    )


def complete_bipartite(m: int, n: int) -> Graph:
    return complete_multipartite(m, n)


def copies(k: int, g: Graph) -> Graph:
    if k < 1:
        raise GraphError("multiplicity must be >= 1")
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


class CatalogName(enum.Enum):
    P_N = "P_n"
    C_N = "C_n"
    K_MN = "K_{m,n}"
    K_211 = "K_{2,1,1}"
    K_331 = "K_{3,3,1}"
    K_6 = "K_6"
    N_P1 = "nP_1"
    TWO_P2 = "2P_2"
    C3_U_C3 = "C_3∪C_3"
    C3_U_P1 = "C_3∪P_1"
    P2_U_P1 = "P_2∪P_1"
    P3_U_P1 = "P_3∪P_1"


_FIXED = {
    CatalogName.K_211: lambda: complete_multipartite(2, 1, 1),
    CatalogName.K_331: lambda: complete_multipartite(3, 3, 1),
    CatalogName.K_6: lambda: complete(6),
    CatalogName.TWO_P2: lambda: copies(2, path(2)),
    CatalogName.C3_U_C3: lambda: copies(2, cycle(3)),
    CatalogName.C3_U_P1: lambda: disjoint_union(cycle(3), path(1)),
    CatalogName.P2_U_P1: lambda: disjoint_union(path(2), path(1)),
    CatalogName.P3_U_P1: lambda: disjoint_union(path(3), path(1)),
}


def make_catalog_graph(name: CatalogName | str, *params: int) -> Graph:
    """Build a named graph, e.g. ``make_catalog_graph("K_{m,n}", 4, 3)``."""
    name = CatalogName(name)
    if name in _FIXED:
        if params:
            raise GraphError(f"{name.value} takes no parameters")
        return _FIXED[name]()
    arity = 2 if name is CatalogName.K_MN else 1
    if len(params) != arity:
        raise GraphError(f"{name.value} takes {arity} parameter(s), got {len(params)}")
    if name is CatalogName.P_N:
        return path(*params)
    if name is CatalogName.C_N:
        return cycle(*params)
    if name is CatalogName.K_MN:
        return complete_bipartite(*params)
    (n,) = params
    if n < 1:
        raise GraphError("nP_1 needs n >= 1")
    return edgeless(n)


_TERM = re.compile(r"^(\d*)([PCK])(\d+(?:,\d+)*)$")


def _parse_term(term: str) -> Graph:
    match = _TERM.match(term)
    if not match:
        raise GraphError(f"cannot parse graph term {term!r}")
    mult, family, args = match.groups()
    nums = [int(a) for a in args.split(",")]
    if family == "P":
        if len(nums) != 1:
            raise GraphError(f"{term!r}: P takes one parameter")
        base = path(nums[0])
    elif family == "C":
        if len(nums) != 1:
            raise GraphError(f"{term!r}: C takes one parameter")
        base = cycle(nums[0])
    elif len(nums) == 1:
        base = complete(nums[0])
    else:
        base = complete_multipartite(*nums)
    return copies(int(mult), base) if mult else base


def parse_graph_name(text: str) -> Graph:
    """Parse the catalog micro-grammar.

    ``expr := union ('+' union)*``, ``union := term ('u' term)*``,
    ``term := [k] (P<n> | C<n> | K<n> | K<a>,<b>[,<c>...])``.
    ``+`` is the join; ``u`` (or ``∪``) the disjoint union; a leading
    integer is the multiplicity. Examples: ``C3uP1``, ``2P2``, ``K4,3``,
    ``P4+P3``.
    """
    text = text.replace(" ", "").replace("∪", "u").replace("_", "")
    text = text.replace("{", "").replace("}", "")
    if not text:
        raise GraphError("empty graph name")
    result = None
    for part in text.split("+"):
        union = None
        for term in part.split("u"):
            g = _parse_term(term)
            union = g if union is None else disjoint_union(union, g)
        result = union if result is None else join(result, union)
    return result


def is_subgraph(g: Graph, host: Graph) -> bool:
    """True iff ``g`` embeds injectively into ``host`` with edges to edges."""
    if g.n > host.n or g.m > host.m:
        return False
    host_adj = host.adjacency
    host_deg = [len(a) for a in host_adj]
    # Place high-degree vertices first, preferring neighbours of placed ones.
    order: list[int] = []
    remaining = set(g.vertices)
    while remaining:
        placed = set(order)
        v = max(
            remaining,
            key=lambda x: (len(g.adjacency[x] & placed), g.degree(x), -x),
        )
        order.append(v)
        remaining.remove(v)
    image = [-1] * g.n
    used = [False] * host.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        need = g.degree(v)
        mapped = [image[u] for u in g.adjacency[v] if image[u] >= 0]
        for w in range(host.n):
            if used[w] or host_deg[w] < need:
                continue
            if any(x not in host_adj[w] for x in mapped):
                continue
            image[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            used[w] = False
            image[v] = -1
        return False

    return extend(0)


def read_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphError("missing header line 'n m'")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise GraphError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"bad edge line {line!r}") from exc
        if not u < v:
            raise GraphError(f"edge line {line!r} must satisfy u < v")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise GraphError("duplicate edge line")
    return Graph(n, tuple(sorted(edges)))


def write_graph(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges])
