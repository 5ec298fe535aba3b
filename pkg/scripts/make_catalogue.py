"""Write tests/data/graphs{n}.g6: every simple graph on n <= 7 vertices up to isomorphism.

Graphs on n vertices are obtained from those on n-1 by adding a vertex with
every possible neighbourhood, then deduplicated with networkx isomorphism
inside Weisfeiler-Lehman hash buckets.  Output order is canonical: sorted
graph6 strings of a fixed representative.
"""
import sys
from itertools import combinations
from pathlib import Path

import networkx as nx

from uberhom.graphs import Graph, emit_graph6

OUT = Path(__file__).resolve().parents[1] / "tests" / "data"


def extend(graphs, n):
    buckets = {}
    for g in graphs:
        for k in range(n):
            for nbrs in combinations(range(n - 1), k):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((v, n - 1) for v in nbrs)
                key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(h, o) for o in bucket):
                    bucket.append(h)
    return [h for b in buckets.values() for h in b]


def main(max_n=7):
    OUT.mkdir(parents=True, exist_ok=True)
    g1 = nx.Graph()
    g1.add_node(0)
    level = [g1]
    for n in range(1, max_n + 1):
        if n > 1:
            level = extend(level, n)
        lines = sorted(emit_graph6(Graph(n, h.edges())) for h in level)
        (OUT / f"graphs{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines), file=sys.stderr)


if __name__ == "__main__":
    main()
