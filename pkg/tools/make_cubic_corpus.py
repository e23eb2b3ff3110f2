#!/usr/bin/env python3
"""Regenerate tests/data/cubic_connected_upto10.g6.

Enumerates every connected 3-regular graph on 4..10 vertices (one per
isomorphism class, via the degree-capped census) and writes them as graph6
lines.  Reference counts per order: 1, 2, 5, 19.  Run from the repo root:

    python3 tools/make_cubic_corpus.py
"""

from pathlib import Path

from cyclechords.census import all_graph_classes
from cyclechords.formats import emit_graph6
from cyclechords.graphs import analyze

EXPECTED = {4: 1, 6: 2, 8: 5, 10: 19}


def connected_cubic(n):
    out = []
    for g in all_graph_classes(n, max_degree=3):
        if all(len(a) == 3 for a in g.adj) and analyze(g).connected:
            out.append(g)
    return out


def main():
    lines = []
    for n, expected in EXPECTED.items():
        graphs = connected_cubic(n)
        assert len(graphs) == expected, f"n={n}: got {len(graphs)}, expected {expected}"
        lines.extend(emit_graph6(g) for g in graphs)
    target = Path(__file__).resolve().parent.parent / "tests" / "data" / "cubic_connected_upto10.g6"
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text("".join(line + "\n" for line in lines))
    print(f"wrote {len(lines)} graphs to {target}")


if __name__ == "__main__":
    main()
