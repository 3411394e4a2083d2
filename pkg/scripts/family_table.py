"""Sizes, witness classes and edge-bound slack of the generated families."""

from oneplanar.drawing import drawing_class
from oneplanar.generators import GENERATORS, join_excludes_c0_by_edges

PARAMS = {
    "cycle-two-chords": range(6, 13),
    "cycle-two-chords-minus": range(6, 13),
    "ladderlike": range(4, 13, 2),
    "4l-cycle": range(2, 6),
}


def main() -> None:
    print(f"{'family':<24}{'p':>3}{'|V|':>5}{'|E|':>5}{'cr':>4}  {'class':<12}bound")
    for family, params in PARAMS.items():
        for p in params:
            inst = GENERATORS[family](p)
            c = inst.claim
            extra = f"  (C0 excluded by edges: {join_excludes_c0_by_edges(inst)})" if c.drawing_class.value else ""
            print(f"{family:<24}{p:>3}{inst.graph.n:>5}{inst.graph.m:>5}{inst.witness.crossings:>4}  "
                  f"{drawing_class(inst.witness).label:<12}{c.bound}: {c.bound_lhs} vs {c.bound_rhs}{extra}")


if __name__ == "__main__":
    main()
