"""Fewest crossings over 1-planar drawings for the small benchmark graphs.

    python3 scripts/crossing_floors.py [--jobs N] [--witness-dir DIR]
"""

import argparse
import time
from pathlib import Path

from oneplanar.fileio import write_drawing
from oneplanar.graphs import parse_graph_name
from oneplanar.search import SearchBudget, witness_min_crossings

GRAPHS = ["K4,3", "K5,3", "K4,4", "K3,3,1", "C3+P3", "K6"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--witness-dir", type=Path)
    ap.add_argument("graphs", nargs="*", default=GRAPHS)
    args = ap.parse_args()
    if args.witness_dir:
        args.witness_dir.mkdir(parents=True, exist_ok=True)
    print(f"{'graph':<10}{'n':>4}{'m':>4}{'min':>5}{'seconds':>9}")
    for name in args.graphs:
        g = parse_graph_name(name)
        t = time.perf_counter()
        d = witness_min_crossings(g, SearchBudget(jobs=args.jobs))
        dt = time.perf_counter() - t
        k = "none" if d is None else d.crossings
        print(f"{name:<10}{g.n:>4}{g.m:>4}{k:>5}{dt:>9.1f}")
        if d is not None and args.witness_dir:
            safe = name.replace(",", "_").replace("+", "plus")
            (args.witness_dir / f"{safe}.txt").write_text(write_drawing(d))


if __name__ == "__main__":
    main()
