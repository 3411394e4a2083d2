"""Rewrites that remove unnecessary crossings from a drawing."""

from __future__ import annotations

from .drawing import Drawing, DrawingError, validate_drawing
from .graphs import edge
from .planarization import PlanarizationBuilder
from .rotation import rev


class RewriteError(ValueError):
    """The precondition of a rewrite does not hold."""


def find_overlap3(d: Drawing) -> tuple[int, int, tuple[int, int]] | None:
    """Smallest ``(c1, c2, e)``: crossings c1, c2 sharing >= 3 endpoints, ``e``
    an edge of c2 with both endpoints around c1."""
    hoods = [set(a + b) for a, b in d.spec.pairs]
    for i, hood in enumerate(hoods):
        for j in range(len(hoods)):
            if i == j or len(hood & hoods[j]) < 3:
                continue
            for e in d.spec.pairs[j]:
                if set(e) <= hood:
                    return i, j, e
    return None


def eliminate_overlap3(d: Drawing) -> Drawing:
    """Remove one crossing of an overlapping pair by rerouting an edge.

    With crossings ``c1`` (of xy and zw) and ``c2`` on the edge xz, the edge
    xz is redrawn hugging the segments c1-x and c1-z, which are consecutive
    around c1; the partner of xz at c2 becomes uncrossed.
    """
    problems = validate_drawing(d)
    if problems:
        raise DrawingError("; ".join(problems))
    found = find_overlap3(d)
    if found is None:
        raise RewriteError("no two crossings share three or more endpoints")
    i, j, moved = found
    b = PlanarizationBuilder.from_drawing(d)
    c1 = _false_id(b, d, i)
    c2 = _false_id(b, d, j)
    partner = next(e for e in d.spec.pairs[j] if e != moved)

    # Drop c2: the partner's two segments merge, the moved edge's vanish.
    darts = {b.head(x): x for x in b.rot[c2]}
    for t in moved:
        b.remove_edge(darts[t] >> 1)
    b.splice(c2, darts[partner[0]], darts[partner[1]], partner)
    del b.rot[c2]

    x, z = moved
    dx, dz = b.dart(c1, x), b.dart(c1, z)
    if b.next_at_tail(dx) != dz:
        x, z, dx, dz = z, x, dz, dx
    if b.next_at_tail(dx) != dz:
        raise RewriteError("segments to the moved edge's endpoints are not consecutive")
    # The face through x -> c1 -> z gets the chord x-z next to that corner.
    before_x = b.prev_dart(rev(dx))
    b.new_edge(x, z, edge(x, z), before_x, rev(dz))
    out = b.freeze(d.n)
    if out.graph != d.graph:
        raise RewriteError("rewrite changed the graph")
    return out


def _false_id(b: PlanarizationBuilder, d: Drawing, i: int):
    # from_drawing names false vertex n + i as the (i + 1)-th false id.
    return b.false_vertices()[i]


def normalize(d: Drawing) -> tuple[Drawing, int]:
    """Apply :func:`eliminate_overlap3` until no pair of crossings overlaps in 3."""
    steps = 0
    while find_overlap3(d) is not None:
        d = eliminate_overlap3(d)
        steps += 1
    return d, steps


def _adjacent_pairs(d: Drawing) -> list[int]:
    return [i for i, (a, b) in enumerate(d.spec.pairs) if set(a) & set(b)]


def eliminate_adjacent_crossing(raw: Drawing) -> Drawing:
    """Uncross the first pair of crossing edges that share an endpoint.

    The four segments at the crossing are reconnected in the way that pairs
    rotation-consecutive segments and reproduces the two original edges.
    Returns the input unchanged if there is no such crossing.
    """
    problems = validate_drawing(raw, relaxed=True)
    if problems:
        raise DrawingError("; ".join(problems))
    adjacent = _adjacent_pairs(raw)
    if not adjacent:
        return raw
    i = adjacent[0]
    e1, e2 = raw.spec.pairs[i]
    b = PlanarizationBuilder.from_drawing(raw)
    c = b.false_vertices()[i]
    ds = list(b.rot[c])
    for shift in (0, 1):
        first = (ds[shift], ds[shift + 1])
        second = (ds[shift + 2], ds[(shift + 3) % 4])
        joined = [edge(b.head(p), b.head(q)) if b.head(p) != b.head(q) else None for p, q in (first, second)]
        if sorted(x for x in joined if x) == sorted([e1, e2]) and None not in joined:
            break
    else:
        raise RewriteError(f"cannot uncross {e1} and {e2}")
    for (p, q), own in zip((first, second), joined):
        b.splice(c, p, q, own)
    del b.rot[c]
    return b.freeze(raw.n)


def clean_adjacent_crossings(raw: Drawing) -> Drawing:
    while _adjacent_pairs(raw):
        raw = eliminate_adjacent_crossing(raw)
    return raw
