"""Independent brute-force oracles used to cross-check the engine.

Everything here is deliberately naive (no pruning, no bounds, no shared
code with the package search internals) so it can serve as the second
route of every dual-route check.
"""

from __future__ import annotations

from itertools import combinations


def canon_cycle(verts):
    """Least rotation over both orientations; mirrors cycle equality."""
    best = None
    for seq in (tuple(verts), tuple(reversed(verts))):
        i = seq.index(min(seq))
        rot = seq[i:] + seq[:i]
        if best is None or rot < best:
            best = rot
    return best


def all_simple_cycles(graph):
    """Every simple cycle of the graph as a set of canonical vertex tuples."""
    out = set()

    def dfs(start, path, visited):
        last = path[-1]
        for nxt in graph.adj[last]:
            if nxt == start and len(path) >= 3:
                out.add(canon_cycle(path))
            elif nxt not in visited and nxt > start:
                visited.add(nxt)
                path.append(nxt)
                dfs(start, path, visited)
                path.pop()
                visited.remove(nxt)

    for s in range(graph.n):
        dfs(s, [s], {s})
    return out


def oracle_circumference(graph):
    """Maximum cycle length by full enumeration; 0 when acyclic."""
    cycles = all_simple_cycles(graph)
    return max((len(c) for c in cycles), default=0)


def cycle_contains_forest(verts, forest):
    vs = set(verts)
    if not forest.vertex_set() <= vs:
        return False
    k = len(verts)
    pairs = {frozenset((verts[i], verts[(i + 1) % k])) for i in range(k)}
    return all(frozenset(e) in pairs for e in forest.edges())


def oracle_longest_forced(graph, forest):
    """(max length, canonical cycle set) over cycles containing the forest."""
    hits = [c for c in all_simple_cycles(graph) if cycle_contains_forest(c, forest)]
    if not hits:
        return 0, set()
    top = max(len(c) for c in hits)
    return top, {c for c in hits if len(c) == top}


def oracle_chords(graph, verts):
    """Chord edges of a cycle given as a vertex tuple."""
    pos = {v: i for i, v in enumerate(verts)}
    k = len(verts)
    chords = set()
    for u, v in combinations(sorted(pos), 2):
        if graph.has_edge(u, v) and (pos[v] - pos[u]) % k not in (1, k - 1):
            chords.add((u, v))
    return chords


def oracle_has_augmentation(graph, cycle, forest):
    """Plain quadruple scan for the two-vertex insertion pattern."""
    verts = cycle.verts
    k = len(verts)
    on_cycle = set(verts)
    fedges = {frozenset(e) for e in forest.edges()}
    outside = [w for w in range(graph.n) if w not in on_cycle]
    for u in outside:
        for v in outside:
            if u == v:
                continue
            for i in range(k):
                for j in range(k):
                    a, a1 = verts[i], verts[(i + 1) % k]
                    b, b1 = verts[j], verts[(j + 1) % k]
                    if len({a, a1, b, b1}) != 4:
                        continue
                    if frozenset((a, a1)) in fedges or frozenset((b, b1)) in fedges:
                        continue
                    if (
                        graph.has_edge(u, a)
                        and graph.has_edge(u, b)
                        and graph.has_edge(v, a1)
                        and graph.has_edge(v, b1)
                    ):
                        return True
    return False


def connected_side(graph, side):
    side = set(side)
    start = next(iter(side))
    seen = {start}
    work = [start]
    while work:
        x = work.pop()
        for y in graph.adj[x]:
            if y in side and y not in seen:
                seen.add(y)
                work.append(y)
    return seen == side


def all_bond_partitions(graph):
    """Every bond as (side frozenset containing 0, crossing edge set)."""
    n = graph.n
    rest = list(range(1, n))
    out = []
    for r in range(len(rest)):
        for extra in combinations(rest, r):
            side = frozenset((0,) + extra)
            other = frozenset(range(n)) - side
            if not other:
                continue
            if connected_side(graph, side) and connected_side(graph, other):
                cut = frozenset(
                    (u, v) for u, v in graph.edges() if (u in side) != (v in side)
                )
                out.append((side, cut))
    return out
