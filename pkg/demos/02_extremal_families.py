#!/usr/bin/env python3
"""The extremal constructions and what the exact engine measures on them.

The ring-with-hubs-and-blobs family keeps minimum degree 3 while pinning
its circumference to 5/12 of the order (for k >= 2 blocks); its designated
ring cycle is chordless.  Note the k = 1 degenerate case: with a single
block the hub neighbors two *adjacent* ring vertices, which buys a detour
one longer than the ring, so the measured circumference is 6, not 5.
"""

from pathlib import Path

from cyclechords import Family, chords_of_cycle, circumference, export_dot, gen_family


def main():
    for k in (1, 2, 3):
        out = gen_family(Family.FIGURE1, k)
        g = out.graph
        length, _ = circumference(g)
        print(
            f"ring family k={k}: n={g.n} m={g.m} delta={g.min_degree()} "
            f"circumference={length} designated={len(out.cycle)} "
            f"chordless={not chords_of_cycle(g, out.cycle)} "
            f"designated_is_longest={out.cycle_is_longest}"
        )

    print()
    for k in (3, 4, 5):
        out = gen_family(Family.WHEEL_K4, k)
        g = out.graph
        length, _ = circumference(g)
        print(
            f"subdivided wheel k={k}: n={g.n} circumference={length} "
            f"designated={len(out.cycle)} (ratio {length}/{g.n})"
        )

    out = gen_family(Family.TWO_CYCLE_BIPARTITE, 4)
    g = out.graph
    print(
        f"\ntwo joined cycles n=4: |V|={g.n} |E|={g.m} "
        f"designated bond size={out.bond.size} (= 4^2), capacity m-n+2={g.m - g.n + 2}"
    )

    target = Path("figure1_k2.dot")
    out = gen_family(Family.FIGURE1, 2)
    target.write_text(export_dot(out.graph, out.cycle))
    print(f"wrote styled DOT drawing to {target}")


if __name__ == "__main__":
    main()
