"""Class of a join G+H from subgraph-majorization tables, plus small-factor checks.

For two factors with at least three vertices each, the class of ``G+H`` is
decided by which table pair majorizes ``[G, H]``. When one factor is
``P_1``, ``2P_1`` or ``P_2`` only necessary conditions are known; those are
checked here and never produce a class verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, copies, cycle, complete_multipartite, disjoint_union, edgeless, is_subgraph, max_degree, path


class JoinError(ValueError):
    pass


class FormulaRangeError(ValueError):
    """A crossing-number formula was asked for outside its proven range."""


@dataclass(frozen=True)
class MajorPair:
    name: str
    first: Graph
    second: Graph


ONE_PLANAR_PAIRS: tuple[MajorPair, ...] = (
    MajorPair("[C3uC3,C3]", copies(2, cycle(3)), cycle(3)),
    MajorPair("[C4,C4]", cycle(4), cycle(4)),
    MajorPair("[C4,C3]", cycle(4), cycle(3)),
    MajorPair("[K2,1,1,P3]", complete_multipartite(2, 1, 1), path(3)),
)
C0_PAIRS: tuple[MajorPair, ...] = (
    MajorPair("[C3,P2uP1]", cycle(3), disjoint_union(path(2), path(1))),
    MajorPair("[P3,P3]", path(3), path(3)),
)
C1_PAIRS: tuple[MajorPair, ...] = (
    MajorPair("[2P2,C3]", copies(2, path(2)), cycle(3)),
    MajorPair("[P4,P3]", path(4), path(3)),
)


class JoinOutcome(enum.Enum):
    C0 = "C0"
    C1 = "C1"
    C2 = "C2"
    NOT_ONE_PLANAR = "NotOnePlanar"
    CONDITION_VIOLATED = "ConditionViolated"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ConditionCheck:
    """One inequality ``lhs <= rhs``; failing it rules out class ``excludes``."""

    condition: str
    excludes: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class JoinVerdict:
    outcome: JoinOutcome
    rule: str
    condition: str | None = None
    checks: tuple[ConditionCheck, ...] = ()

    def __str__(self) -> str:
        if self.outcome is JoinOutcome.CONDITION_VIOLATED:
            return f"{self.outcome.value}({self.condition}) (rule: {self.rule})"
        return f"{self.outcome.value} (rule: {self.rule})"


def pair_majorized(g: Graph, h: Graph, pair: MajorPair) -> bool:
    a, b = pair.first, pair.second
    return (is_subgraph(g, a) and is_subgraph(h, b)) or (is_subgraph(g, b) and is_subgraph(h, a))


def _first_match(g: Graph, h: Graph, table) -> MajorPair | None:
    return next((p for p in table if pair_majorized(g, h, p)), None)


def classify_join_both_ge3(g: Graph, h: Graph) -> JoinVerdict:
    if g.n < 3 or h.n < 3:
        raise JoinError("both factors need at least three vertices")
    planar_pair = _first_match(g, h, ONE_PLANAR_PAIRS)
    if planar_pair is None:
        return JoinVerdict(JoinOutcome.NOT_ONE_PLANAR, "no 1-planar pair majorizes")
    pair = _first_match(g, h, C0_PAIRS)
    if pair is not None:
        return JoinVerdict(JoinOutcome.C0, f"C0 pair {pair.name}")
    pair = _first_match(g, h, C1_PAIRS)
    if pair is not None:
        return JoinVerdict(JoinOutcome.C1, f"C1 pair {pair.name}")
    return JoinVerdict(JoinOutcome.C2, f"1-planar pair {planar_pair.name}; not in C0 or C1 tables")


SMALL_FACTORS = {"P1": path(1), "2P1": edgeless(2), "P2": path(2)}


def small_factor_name(h: Graph) -> str:
    for name, f in SMALL_FACTORS.items():
        if f == h:
            return name
    raise JoinError("small factor must be P1, 2P1 or P2")


def small_factor_checks(g: Graph, h: Graph) -> list[ConditionCheck]:
    """All conditions that apply for this small factor, C1 ones first."""
    name = small_factor_name(h)
    v, e, delta = g.n, g.m, max_degree(g)
    out = []
    if name in ("2P1", "P2"):
        out.append(ConditionCheck("C1:max-degree<=4", "C1", delta, 4))
    if name == "2P1":
        out.append(ConditionCheck("C1:5|E|<=8|V|", "C1", 5 * e, 8 * v))
    if name == "P1":
        out.append(ConditionCheck("C1:5|E|<=13|V|-18", "C1", 5 * e, 13 * v - 18))
    if name in ("2P1", "P2"):
        out.append(ConditionCheck("C0:max-degree<=3", "C0", delta, 3))
    if name == "2P1":
        out.append(ConditionCheck("C0:|E|<=|V|+2", "C0", e, v + 2))
    if name == "P2":
        out.append(ConditionCheck("C0:|E|<=|V|+1", "C0", e, v + 1))
    if name == "P1":
        out.append(ConditionCheck("C0:4|E|<=9|V|-11", "C0", 4 * e, 9 * v - 11))
    return out


def check_small_factor_conditions(g: Graph, h: Graph, target: str | None = None) -> JoinVerdict:
    """First violated necessary condition for ``g + h``, else Inconclusive.

    ``target`` ("C0" or "C1") restricts the checks to one candidate class.
    """
    if target not in (None, "C0", "C1"):
        raise JoinError(f"unknown target class {target!r}")
    checks = [c for c in small_factor_checks(g, h) if target is None or c.excludes == target]
    for c in checks:
        if not c.holds:
            return JoinVerdict(
                JoinOutcome.CONDITION_VIOLATED,
                f"{g.n}-vertex G fails {c.condition} ({c.lhs} > {c.rhs}); not {c.excludes}",
                c.condition,
                tuple(checks),
            )
    return JoinVerdict(JoinOutcome.INCONCLUSIVE, "all necessary conditions hold", None, tuple(checks))


def _z(m: int) -> int:
    return (m // 2) * ((m - 1) // 2)


def cr_complete_bipartite(m: int, n: int) -> int:
    """Crossing number of K_{m,n}, valid for ``min(m, n) <= 6``."""
    if m < 1 or n < 1:
        raise FormulaRangeError("m and n must be >= 1")
    if min(m, n) > 6:
        raise FormulaRangeError("formula only proven for min(m, n) <= 6")
    return _z(m) * _z(n)


def cr_cycle_plus_path(n: int, m: int) -> int:
    """Crossing number of C_n + P_m, valid for ``m >= 2``, ``n >= 3``, ``min(m, n) <= 6``."""
    if m < 2 or n < 3:
        raise FormulaRangeError("needs m >= 2 and n >= 3")
    if min(m, n) > 6:
        raise FormulaRangeError("formula only proven for min(m, n) <= 6")
    return _z(m) * _z(n) + 1
