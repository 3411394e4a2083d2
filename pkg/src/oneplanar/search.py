"""Exhaustive search over crossing specifications.

Specs are explored depth first over the edge list in sorted order: at edge
``i`` the search first tries pairing it with each later, non-adjacent,
still-free edge (ascending), then tries leaving it uncrossed. This visits
specs in lexicographic order, so the first realizable spec found at the
smallest crossing count is the canonical witness.

Every search node stands for a partial decision: some edges fixed as
uncrossed, some pairs fixed as crossing. The plane gadget graph of the fixed
part (uncrossed edges plus a wheel per fixed crossing) must be planar for
any completion to be realizable, so a failed planarity test prunes the
whole subtree. ``node_limit`` counts these tests, cache hits included, so
budgets behave identically with any number of workers.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import networkx as nx

from .bounds import bound_c0_max_crossings, bound_c1_max_crossings, crossings_lower_bound, crossings_upper_bound
from .drawing import CrossingSpec, Drawing, DrawingClass, max_overlap
from .graphs import Graph
from .planarity import realize_crossing_spec
from .rewrite import normalize

SPINE_DEPTH = 6  # prefix depth used to cut the search into parallel blocks


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search call.

    ``max_crossings`` defaults to ``min(floor(m/2), n - 2)``: a crossing uses
    two edges, and no 1-planar drawing has more than ``n - 2`` crossings.
    ``class_cap`` restricts to drawings of that class or better.
    ``node_limit`` caps the number of planarity tests.
    """

    max_crossings: int | None = None
    class_cap: DrawingClass | None = None
    node_limit: int | None = None
    jobs: int = 1
    use_bounds: bool = True

    def __post_init__(self) -> None:
        if self.max_crossings is not None and self.max_crossings < 0:
            raise ValueError("max_crossings must be >= 0")
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node_limit must be >= 0")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def ceiling(self, g: Graph) -> int:
        if self.max_crossings is not None:
            return self.max_crossings
        return crossings_upper_bound(g.n, g.m)


class GraphClass(enum.Enum):
    C0 = "C0"
    C1 = "C1"
    C2 = "C2"
    NOT_ONE_PLANAR = "NotOnePlanar"

    @property
    def label(self) -> str:
        return self.value


class BudgetExceeded(RuntimeError):
    """The node limit ran out before the question was settled.

    ``partial`` describes what was established before stopping.
    """

    def __init__(self, partial: str, nodes: int):
        super().__init__(f"node limit exceeded after {nodes} planarity tests ({partial})")
        self.partial = partial
        self.nodes = nodes


@dataclass
class Classification:
    level: GraphClass
    witness: Drawing | None
    crossings: int | None
    nodes: int


@dataclass
class _Counter:
    limit: int | None
    used: int = 0

    def tick(self) -> bool:
        """Count one test; False once the limit is exceeded."""
        self.used += 1
        return self.limit is None or self.used <= self.limit


class _Exhausted(Exception):
    def __init__(self, k: int | None = None):
        self.k = k


# -- the depth-first core -------------------------------------------------


@dataclass
class _Problem:
    g: Graph
    k: int
    cap: int | None  # largest allowed pairwise overlap
    test_planarity: bool = True
    later: list[list[int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        es = self.g.edges
        self.later = [
            [j for j in range(i + 1, len(es)) if not set(es[i]) & set(es[j])] for i in range(len(es))
        ]


@dataclass
class _State:
    pairs: tuple[tuple[int, int], ...] = ()
    uncrossed: tuple[int, ...] = ()
    used: frozenset[int] = frozenset()  # edges already placed in a pair
    next: int = 0

    def key(self) -> tuple:
        return (self.pairs, self.uncrossed)


_cache: dict[tuple, bool] = {}
_cache_graph: Graph | None = None


def _gadget_planar(g: Graph, st: _State) -> bool:
    global _cache_graph
    if _cache_graph != g:
        _cache.clear()
        _cache_graph = g
    key = st.key()
    hit = _cache.get(key)
    if hit is not None:
        return hit
    es = g.edges
    edges = {es[i] for i in st.uncrossed}
    verts = {v for e in edges for v in e}
    for t, (i, j) in enumerate(st.pairs):
        (u, v), (x, z) = es[i], es[j]
        c = g.n + t
        edges.update(((c, u), (c, v), (c, x), (c, z)))
        for a, b in ((u, x), (x, v), (v, z), (z, u)):
            edges.add((min(a, b), max(a, b)))
        verts.update((c, u, v, x, z))
    if len(verts) >= 3 and len(edges) > 3 * len(verts) - 6:
        ok = False
    else:
        h = nx.Graph()
        h.add_edges_from(edges)
        ok = nx.check_planarity(h)[0]
    _cache[key] = ok
    return ok


def _overlap_ok(p: _Problem, st: _State, i: int, j: int) -> bool:
    if p.cap is None or not st.pairs:
        return True
    es = p.g.edges
    hood = set(es[i] + es[j])
    return all(len(hood & set(es[a] + es[b])) <= p.cap for a, b in st.pairs)


def _children(p: _Problem, st: _State) -> Iterator[_State]:
    """Child states in lexicographic order, after the cheap combinatorial prunes."""
    m = p.g.m
    i = st.next
    while i < m and i in st.used:
        i += 1
    if i >= m:
        return
    undecided = m - 2 * len(st.pairs) - len(st.uncrossed)
    need = p.k - len(st.pairs)
    if need > 0:
        used = st.used | {i}
        for j in p.later[i]:
            if j in st.used or not _overlap_ok(p, st, i, j):
                continue
            yield _State(st.pairs + ((i, j),), st.uncrossed, used | {j}, i + 1)
    # Leaving i uncrossed must still leave room for the missing pairs.
    if 2 * need <= undecided - 1:
        yield _State(st.pairs, st.uncrossed + (i,), st.used, i + 1)


def _is_leaf(p: _Problem, st: _State) -> bool:
    return len(st.pairs) == p.k and 2 * len(st.pairs) + len(st.uncrossed) == p.g.m


def _dfs(p: _Problem, st: _State, counter: _Counter) -> _State | None:
    if _is_leaf(p, st):
        return st
    for child in _children(p, st):
        if p.test_planarity:
            if not counter.tick():
                raise _Exhausted
            if not _gadget_planar(p.g, child):
                continue
        found = _dfs(p, child, counter)
        if found is not None:
            return found
    return None


def _spec(p: _Problem, st: _State) -> CrossingSpec:
    es = p.g.edges
    return CrossingSpec.of((es[i], es[j]) for i, j in st.pairs)


def _iter_leaves(p: _Problem, st: _State) -> Iterator[_State]:
    if _is_leaf(p, st):
        yield st
        return
    for child in _children(p, st):
        yield from _iter_leaves(p, child)


def enumerate_specs(g: Graph, size: int, class_cap: DrawingClass | None = None) -> Iterator[CrossingSpec]:
    """Every valid spec with exactly ``size`` pairs, in lexicographic order.

    With ``class_cap`` only specs whose overlap class is within the cap are
    produced; the filter is purely combinatorial.
    """
    if size < 0:
        raise ValueError("size must be >= 0")
    p = _Problem(g, size, _cap_overlap(class_cap), test_planarity=False)
    for leaf in _iter_leaves(p, _State()):
        yield _spec(p, leaf)


def _cap_overlap(cap: DrawingClass | None) -> int | None:
    if cap is None or cap is DrawingClass.UNNORMALIZED:
        return None
    return int(cap)


# -- block-parallel level search --------------------------------------------


def _block_task(args) -> tuple[_State | None, int, bool]:
    g, k, cap, state, limit, test_root = args
    p = _Problem(g, k, cap)
    counter = _Counter(limit)
    try:
        if test_root:
            if not counter.tick():
                raise _Exhausted
            if not _gadget_planar(g, state):
                return None, counter.used, False
        return _dfs(p, state, counter), counter.used, False
    except _Exhausted:
        return None, counter.used, True


def _plan_blocks(p: _Problem) -> list[tuple[str, _State]]:
    """The root's subtree cut along the all-uncrossed spine.

    Sequential DFS order is: the pairing children of spine node 0 with their
    subtrees, then the test of spine node 1, its pairing children, and so
    on; the deepest spine node keeps its whole subtree. Items are
    ``("tree", s)`` (test s, then search below it), ``("test", s)`` or
    ``("rest", s)`` (search below an already tested s).
    """
    plan: list[tuple[str, _State]] = []
    st = _State()
    for _ in range(SPINE_DEPTH):
        if _is_leaf(p, st):
            break
        kids = list(_children(p, st))
        spine = kids[-1] if kids and kids[-1].pairs == st.pairs else None
        plan += [("tree", c) for c in kids if c is not spine]
        if spine is None:
            return plan
        plan.append(("test", spine))
        if not _gadget_planar(p.g, spine):
            return plan
        st = spine
    plan.append(("rest", st))
    return plan


def _search_level_parallel(p: _Problem, counter: _Counter, jobs: int) -> _State | None:
    """Same witness and node count as :func:`_dfs` from the root."""
    plan = _plan_blocks(p)
    limit = None if counter.limit is None else counter.limit - counter.used
    work = [(p.g, p.k, p.cap, st, limit, kind == "tree") for kind, st in plan if kind != "test"]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_block_task, w) for w in work]
        results = iter(futures)
        try:
            for kind, st in plan:
                if kind == "test":
                    if not counter.tick():
                        raise _Exhausted
                    if not _gadget_planar(p.g, st):
                        return None
                    continue
                found, used, exhausted = next(results).result()
                counter.used += used
                if exhausted or (counter.limit is not None and counter.used > counter.limit):
                    # sequential search stops at the first test past the limit
                    counter.used = counter.limit + 1
                    raise _Exhausted
                if found is not None:
                    return found
        finally:
            for f in futures:
                f.cancel()
    return None


def _search_level(p: _Problem, counter: _Counter, jobs: int) -> _State | None:
    if jobs > 1 and p.k > 0:
        return _search_level_parallel(p, counter, jobs)
    return _dfs(p, _State(), counter)


def _search(g: Graph, ks, cap: DrawingClass | None, counter: _Counter, jobs: int) -> tuple[int, CrossingSpec] | None:
    for k in ks:
        p = _Problem(g, k, _cap_overlap(cap))
        try:
            found = _search_level(p, counter, jobs)
        except _Exhausted:
            raise _Exhausted(k) from None
        if found is not None:
            return k, _spec(p, found)
    return None


def _k_range(g: Graph, low_ok: bool, ceiling: int) -> range:
    low = crossings_lower_bound(g.n, g.m) if low_ok else 0
    return range(low, ceiling + 1)


def min_one_planar_crossings(g: Graph, budget: SearchBudget = SearchBudget()) -> int | None:
    """Fewest crossings over 1-planar drawings of ``g`` within the budget.

    ``None`` means no drawing exists with at most ``budget.max_crossings``
    crossings (within ``budget.class_cap`` if set).
    """
    found = witness_min_crossings(g, budget)
    return None if found is None else found.crossings


def witness_min_crossings(g: Graph, budget: SearchBudget = SearchBudget()) -> Drawing | None:
    """Like :func:`min_one_planar_crossings` but returns the canonical witness."""
    counter = _Counter(budget.node_limit)
    ks = _k_range(g, budget.use_bounds, budget.ceiling(g))
    try:
        hit = _search(g, ks, budget.class_cap, counter, budget.jobs)
    except _Exhausted as exc:
        raise BudgetExceeded(f"no drawing with fewer than {exc.k} crossings", counter.used) from None
    if hit is None:
        return None
    return _realize(g, hit[1])


def _realize(g: Graph, spec: CrossingSpec) -> Drawing:
    d = realize_crossing_spec(g, spec)
    if d is None:  # the leaf test already covered the full gadget graph
        raise AssertionError(f"search accepted an unrealizable spec {spec}")
    return d


def class_ceiling(g: Graph, cls: DrawingClass) -> int:
    """Most crossings a drawing of class ``cls`` can have on this graph."""
    top = crossings_upper_bound(g.n, g.m)
    if cls is DrawingClass.C0:
        return min(top, bound_c0_max_crossings(g.n))
    if cls is DrawingClass.C1 and g.n >= 2:
        return min(top, bound_c1_max_crossings(g.n))
    return top


def has_class_drawing(
    g: Graph,
    cls: DrawingClass,
    exact_crossings: int | None = None,
    *,
    node_limit: int | None = None,
    jobs: int = 1,
    use_bounds: bool = True,
) -> Drawing | None:
    """A drawing of class ``cls`` or better (with exactly that many crossings if given)."""
    counter = _Counter(node_limit)
    if exact_crossings is not None:
        ks = range(exact_crossings, exact_crossings + 1)
    elif use_bounds:
        ks = _k_range(g, True, class_ceiling(g, cls))
    else:
        ks = range(0, crossings_upper_bound(g.n, g.m) + 1)
    try:
        hit = _search(g, ks, cls, counter, jobs)
    except _Exhausted:
        raise BudgetExceeded(f"no {cls.label} found yet", counter.used) from None
    return None if hit is None else _realize(g, hit[1])


def classify_graph(g: Graph, budget: SearchBudget = SearchBudget()) -> Classification:
    """The best class any 1-planar drawing of ``g`` achieves, with a witness.

    C0 and C1 searches stop at the crossing ceilings those classes allow; the
    final phase accepts any drawing and normalizes the witness.
    """
    counter = _Counter(budget.node_limit)
    ceiling = budget.ceiling(g)
    settled = "nothing settled"
    phases = [
        (GraphClass.C0, DrawingClass.C0, min(ceiling, class_ceiling(g, DrawingClass.C0))),
        (GraphClass.C1, DrawingClass.C1, min(ceiling, class_ceiling(g, DrawingClass.C1))),
        (GraphClass.C2, None, ceiling),
    ]
    try:
        for level, cap, top in phases:
            hit = _search(g, _k_range(g, budget.use_bounds, top), cap, counter, budget.jobs)
            if hit is not None:
                d = _realize(g, hit[1])
                if max_overlap(d.spec) >= 3:
                    d, _ = normalize(d)
                return Classification(level, d, d.crossings, counter.used)
            settled = f"not {level.label}"
    except _Exhausted as exc:
        raise BudgetExceeded(f"{settled}; stopped at {exc.k} crossings", counter.used) from None
    return Classification(GraphClass.NOT_ONE_PLANAR, None, None, counter.used)


def graph_class_of_drawing(cls: DrawingClass) -> GraphClass:
    return {DrawingClass.C0: GraphClass.C0, DrawingClass.C1: GraphClass.C1}.get(cls, GraphClass.C2)
