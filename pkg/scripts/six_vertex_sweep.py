"""Classify every graph on six vertices (one per isomorphism class) by search."""

from collections import Counter

import networkx as nx

from oneplanar.graphs import Graph
from oneplanar.search import classify_graph


def main() -> None:
    graphs = [Graph.from_edges(6, a.edges()) for a in nx.graph_atlas_g() if a.number_of_nodes() == 6]
    tally: Counter = Counter()
    for g in graphs:
        result = classify_graph(g)
        tally[result.level.label] += 1
        if result.level.label != "C0":
            print(f"{result.level.label:<13} m={g.m:<3} {list(g.edges)}")
    print(f"{len(graphs)} graphs: " + ", ".join(f"{k}={v}" for k, v in sorted(tally.items())))


if __name__ == "__main__":
    main()
