#!/usr/bin/env python3
"""Longest cycles, enumeration of all maxima, and chord detection.

The engine is exact: it never returns a heuristic answer, and the set of
maximum cycles is deduplicated up to rotation and reflection.
"""

from cyclechords import (
    LinearForest,
    build_graph,
    chords_of_cycle,
    circumference,
    complete_graph,
    longest_cycles_all,
    petersen,
)


def main():
    k4 = complete_graph(4)
    length, witness = circumference(k4)
    print(f"K4: circumference {length}, witness {witness.verts}")
    length, cycles = longest_cycles_all(k4)
    print(f"K4: {len(cycles)} distinct hamiltonian cycles (expected (4-1)!/2 = 3)")
    for cyc in sorted(cycles, key=lambda c: c.canonical()):
        print(f"    {cyc.canonical()} with chords {sorted(chords_of_cycle(k4, cyc))}")

    pet = petersen()
    length, cycles = longest_cycles_all(pet)
    print(f"\nPetersen: circumference {length}, {len(cycles)} longest cycles")
    print(f"every longest cycle chorded: {all(chords_of_cycle(pet, c) for c in cycles)}")

    # forcing a linear forest: which maximum cycles pass through edge (0, 5)
    # and vertex 7?
    forest = LinearForest(((0, 5), (7,)))
    length, cycles = longest_cycles_all(pet, forest)
    print(f"forced through edge (0,5) and vertex 7: length {length}, {len(cycles)} cycles")

    # a graph whose longest cycle avoids part of the graph entirely
    barbell = build_graph(
        7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]
    )
    length, witness = circumference(barbell)
    print(f"\ntwo triangles joined by a path: circumference {length}, witness {witness.verts}")


if __name__ == "__main__":
    main()
