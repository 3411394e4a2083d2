"""Join classes for small factor pairs: table rule next to exhaustive search.

    python3 scripts/join_table.py [--max-total 7]

Both factors range over all graphs with at least three vertices (from the
networkx atlas) with at most ``--max-total`` vertices together.
"""

import argparse
import itertools
import time

import networkx as nx

from oneplanar.graphs import Graph, join
from oneplanar.joins import classify_join_both_ge3
from oneplanar.search import classify_graph


def factors(n: int) -> list[Graph]:
    return [Graph.from_edges(n, a.edges()) for a in nx.graph_atlas_g() if a.number_of_nodes() == n]


def main() -> None:
    ap = argparse.ArgumentParser(description="join table against search")
    ap.add_argument("--max-total", type=int, default=7)
    args = ap.parse_args()
    sizes = range(3, args.max_total - 2)
    mismatches = 0
    for a, b in itertools.combinations_with_replacement(sizes, 2):
        if a + b > args.max_total:
            continue
        pairs = itertools.combinations_with_replacement(factors(a), 2) if a == b else itertools.product(factors(a), factors(b))
        for g, h in pairs:
            verdict = classify_join_both_ge3(g, h)
            t = time.perf_counter()
            level = classify_graph(join(g, h)).level
            ok = verdict.outcome.value == level.value
            mismatches += not ok
            print(f"{str(g.edges):<42} {str(h.edges):<42} {verdict.outcome.value:<13} {level.label:<13} "
                  f"{'ok' if ok else 'MISMATCH'} {time.perf_counter() - t:6.1f}s", flush=True)
    print(f"mismatches: {mismatches}")


if __name__ == "__main__":
    main()
