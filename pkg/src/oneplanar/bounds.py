"""Crossing and edge bounds for the three classes, in exact arithmetic."""

from __future__ import annotations

from fractions import Fraction

from .drawing import DrawingClass


class BoundError(ValueError):
    pass


def bound_c0_max_crossings(n: int) -> int:
    """Crossings in a C0-drawing: the neighbourhoods are disjoint 4-sets."""
    if n < 0:
        raise BoundError("n must be >= 0")
    return n // 4


def bound_c1_max_crossings(n: int) -> int:
    """Crossings in any C1-drawing on ``n`` vertices: ``floor(3n/5 - 6/5)``."""
    if n < 2:
        raise BoundError("n must be >= 2")
    return (3 * n - 6) // 5


def bound_max_edges(n: int, cls) -> Fraction:
    """Edge ceiling for class C0 (13n/4 - 6), C1 (18n/5 - 36/5) or C2 (4n - 8).

    The C2 value is the general 1-planar ceiling and is reported for context only.
    """
    if n < 3:
        raise BoundError("n must be >= 3")
    level = DrawingClass(int(cls))
    if level is DrawingClass.C0:
        return Fraction(13 * n, 4) - 6
    if level is DrawingClass.C1:
        return Fraction(18 * n, 5) - Fraction(36, 5)
    if level is DrawingClass.C2:
        return Fraction(4 * n - 8)
    raise BoundError(f"no edge bound for {level!r}")


def within_edge_bound(n: int, m: int, cls) -> bool:
    return m <= bound_max_edges(n, cls)


def crossings_lower_bound(n: int, m: int) -> int:
    """Fewest crossings any 1-planar drawing can have.

    Dropping one edge per crossing leaves a plane graph: ``m - k <= 3n - 6``.
    """
    if n < 3:
        return 0
    return max(0, m - (3 * n - 6))


def crossings_upper_bound(n: int, m: int) -> int:
    """Most crossings any 1-planar drawing can have.

    Each crossing uses two edges, and the false vertices with their 4k
    segments form a plane bipartite graph on ``n + k`` vertices, so
    ``4k <= 2(n + k) - 4``.
    """
    cap = m // 2
    if n >= 2:
        cap = min(cap, max(n - 2, 0))
    return cap
