"""Regenerate tests/fixtures/graphs_n{N}.g6: all graphs on N vertices up to isomorphism.

Orderly-ish generation by vertex augmentation: every graph on N vertices is a
graph on N-1 vertices plus one vertex with some neighbourhood, so augmenting
each (N-1)-graph by all 2^(N-1) neighbourhoods and deduplicating by nauty's
canonical certificate is complete. Output graphs are canonically labelled and
sorted, so the files are stable.

Needs pynauty (``pip install pynauty``); only used here, not by the package.

    python tools/gen_graph_fixtures.py [MAX_N]
"""
import os
import sys

import pynauty

from prismatic.graph import Graph, to_graph6

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
OUT = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")


def canonical(n, rows):
    adjdict = {u: [v for v in range(n) if rows[u] >> v & 1] for u in range(n)}
    pg = pynauty.Graph(n, adjacency_dict=adjdict)
    lab = pynauty.canon_label(pg)
    pos = {old: new for new, old in enumerate(lab)}
    out = [0] * n
    for u in range(n):
        for v in adjdict[u]:
            out[pos[u]] |= 1 << pos[v]
    return tuple(out)


def main(max_n=8):
    level = {(0,)}  # n = 1
    for n in range(1, max_n + 1):
        if n > 1:
            nxt = set()
            for rows in level:
                for nb in range(1 << (n - 1)):
                    new = [r | ((nb >> u & 1) << (n - 1)) for u, r in enumerate(rows)]
                    new.append(nb)
                    nxt.add(canonical(n, new))
            level = nxt
        assert len(level) == EXPECTED[n], (n, len(level))
        lines = sorted(to_graph6(Graph(n, rows)) for rows in level)
        with open(os.path.join(OUT, f"graphs_n{n}.g6"), "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print(n, len(lines))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
