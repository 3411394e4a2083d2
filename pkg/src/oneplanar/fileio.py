"""Text formats for drawings, plus DOT export.

A drawing file has three sections, each opened by its keyword alone on a
line::

    GRAPH
    <graph text format: "n m" then m lines "u v">
    CROSSINGS
    u v x z          # edge uv crosses edge xz, one line per crossing
    ROTATIONS
    0: 3 x0 1        # cyclic neighbour order of every planarization vertex
    x0: 0 2 1 3

False vertices are written ``x<i>`` with ``i`` the 0-based line index in
CROSSINGS. Blank lines and ``#`` comments are ignored. When a false vertex
meets the same true vertex twice (raw drawings with adjacent crossings), the
i-th ``x<j>`` in the true vertex's list is the i-th occurrence of that true
vertex in the ``x<j>`` list.
"""

from __future__ import annotations

from collections import Counter

from .drawing import CrossingSpec, Drawing, DrawingError, normalize_pair, validate_drawing
from .graphs import Graph, GraphError, edge, read_graph, write_graph
from .rotation import RotationError, RotationSystem, from_neighbor_lists

SECTIONS = ("GRAPH", "CROSSINGS", "ROTATIONS")


class FormatError(ValueError):
    pass


def _name(d: Drawing, v: int) -> str:
    return f"x{v - d.n}" if d.is_false(v) else str(v)


def _sort_key(d: Drawing, v: int) -> tuple[int, int]:
    return (1, v - d.n) if d.is_false(v) else (0, v)


def _canonical_cycle(names: list[tuple[int, int]]) -> int:
    """Rotation offset giving the lexicographically smallest cyclic sequence."""
    if not names:
        return 0
    return min(range(len(names)), key=lambda s: names[s:] + names[:s])


def write_drawing(d: Drawing) -> str:
    r = d.planarization
    lines = ["GRAPH", write_graph(d.graph).rstrip("\n"), "CROSSINGS"]
    for (u, v), (x, z) in d.spec.pairs:
        lines.append(f"{u} {v} {x} {z}")
    lines.append("ROTATIONS")
    order: dict[int, list[int]] = {}
    for v in sorted(r.rotation):
        ds = list(r.rotation[v])
        keys = [_sort_key(d, r.head(x)) for x in ds]
        s = _canonical_cycle(keys)
        order[v] = ds[s:] + ds[:s]
    _match_parallel_occurrences(d, order)
    for v in sorted(r.rotation):
        nbrs = " ".join(_name(d, r.head(x)) for x in order[v])
        lines.append(f"{_name(d, v)}: {nbrs}".rstrip())
    return "\n".join(lines) + "\n"


def _match_parallel_occurrences(d: Drawing, order: dict[int, list[int]]) -> None:
    """Rotate false-vertex lists so parallel segments pair up by occurrence."""
    r = d.planarization
    for i in range(d.crossings):
        c = d.false_vertex(i)
        heads = [r.head(x) for x in order[c]]
        if len(set(heads)) == len(heads):
            continue
        ds = order[c]
        for s in range(len(ds)):
            cand = ds[s:] + ds[:s]
            if all(_occurrence_ok(r, order, c, t, cand) for t in set(heads)):
                order[c] = cand
                break
        else:
            raise FormatError(f"cannot serialise parallel segments at x{i}")


def _occurrence_ok(r: RotationSystem, order, c: int, t: int, cand: list[int]) -> bool:
    at_c = [x for x in cand if r.head(x) == t]
    at_t = [x ^ 1 for x in order[t] if r.head(x) == c]
    return at_c == at_t


def read_drawing(text: str, *, raw: bool = False) -> Drawing:
    """Parse a drawing file; ``raw`` admits crossings of adjacent edges.

    Strict mode also runs full validation and raises :class:`DrawingError`
    listing every violated invariant.
    """
    sections: dict[str, list[str]] = {}
    current = None
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped in SECTIONS:
            if stripped in sections:
                raise FormatError(f"section {stripped} repeated")
            current = stripped
            sections[current] = []
            continue
        if current is None:
            raise FormatError(f"content before the first section: {line!r}")
        sections[current].append(stripped)
    missing = [s for s in SECTIONS if s not in sections]
    if missing:
        raise FormatError(f"missing section(s): {', '.join(missing)}")
    try:
        graph = read_graph("\n".join(sections["GRAPH"]))
    except GraphError as exc:
        raise FormatError(f"GRAPH: {exc}") from exc

    file_pairs = []
    for line in sections["CROSSINGS"]:
        parts = line.split()
        if len(parts) != 4:
            raise FormatError(f"bad crossing line {line!r}")
        try:
            u, v, x, z = (int(p) for p in parts)
        except ValueError:
            raise FormatError(f"bad crossing line {line!r}") from None
        file_pairs.append(normalize_pair((u, v), (x, z)))
    k = len(file_pairs)
    if len(set(file_pairs)) != k:
        raise FormatError("crossing listed twice")
    n = graph.n
    # False vertices are renumbered into canonical (sorted) pair order.
    canonical = sorted(file_pairs)
    relabel = {n + i: n + canonical.index(p) for i, p in enumerate(file_pairs)}

    def parse_vertex(tok: str) -> int:
        if tok.startswith("x"):
            i = int(tok[1:])
            if not 0 <= i < k:
                raise FormatError(f"unknown false vertex {tok}")
            return relabel[n + i]
        v = int(tok)
        if not 0 <= v < n:
            raise FormatError(f"unknown vertex {tok}")
        return v

    lists: dict[int, list[int]] = {}
    for line in sections["ROTATIONS"]:
        if ":" not in line:
            raise FormatError(f"bad rotation line {line!r}")
        head, rest = line.split(":", 1)
        try:
            v = parse_vertex(head.strip())
            nbrs = [parse_vertex(t) for t in rest.split()]
        except ValueError as exc:
            raise FormatError(f"bad rotation line {line!r}: {exc}") from exc
        if v in lists:
            raise FormatError(f"rotation of {head.strip()} given twice")
        lists[v] = nbrs
    for v in range(n + k):
        lists.setdefault(v, [])
    try:
        r = from_neighbor_lists(lists)
    except RotationError as exc:
        raise FormatError(f"ROTATIONS: {exc}") from exc
    spec = CrossingSpec(tuple(canonical))
    owner = tuple(_owner(r, spec, n, i) for i in range(len(r.edges)))
    if any(o is None for o in owner):
        raise FormatError("a segment at a false vertex matches neither crossing edge")
    d = Drawing(graph, spec, r, owner)
    problems = validate_drawing(d, relaxed=raw)
    if problems:
        raise DrawingError("; ".join(problems))
    return d


def _owner(r: RotationSystem, spec: CrossingSpec, n: int, i: int):
    u, v = r.edges[i]
    if u < n and v < n:
        return edge(u, v)
    c, t = (u, v) if u >= n else (v, u)
    if u >= n and v >= n:
        return None
    pair = spec.pairs[c - n]
    holders = [e for e in pair if t in e]
    if len(holders) == 1:
        return holders[0]
    # t lies on both edges: the opposite segment at c names the owner.
    ds = list(r.rotation[c])
    dart = 2 * i if u == c else 2 * i + 1
    if len(ds) != 4:
        return None
    opposite = r.head(ds[(ds.index(dart) + 2) % 4])
    holders = [e for e in pair if set(e) == {t, opposite}]
    return holders[0] if holders else None


def to_dot(d: Drawing, name: str = "planarization") -> str:
    """DOT text of the planarization; false vertices are small red points."""
    r = d.planarization
    lines = [f"graph {name} {{"]
    for v in sorted(r.rotation):
        if d.is_false(v):
            lines.append(f'  "{_name(d, v)}" [shape=point, color=red, width=0.12];')
        else:
            lines.append(f'  "{v}" [shape=circle];')
    crossed = {e for p in d.spec.pairs for e in p}
    for (u, v), own in zip(r.edges, d.owner):
        style = ' [color=red, style=dashed]' if own in crossed else ""
        lines.append(f'  "{_name(d, u)}" -- "{_name(d, v)}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_graph_file(g: Graph) -> str:
    return write_graph(g)
