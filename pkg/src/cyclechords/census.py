"""Isomorph-free small-graph enumeration via canonical adjacency codes.

The canonical form of a graph is the lexicographically least column-packed
upper-triangle adjacency encoding over all vertex relabelings.  Color
refinement first splits vertices into order-invariant cells (so only
cell-respecting relabelings need be considered), then a greedy tie-following
sweep assigns positions one at a time, keeping every partial labeling that
attains the minimal next block.  The sweep therefore computes exactly the
minimum over all relabelings, at far below factorial cost on typical
graphs.

Graphs on n vertices are enumerated by extending every (n-1)-vertex class
representative with one new vertex over all neighborhoods and deduplicating
children by canonical code; deleting any vertex of any n-vertex graph lands
in the previous level, so the sweep is exhaustive.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, is_k_connected


def _refine_cells(n: int, nbr: list[int]) -> list[list[int]]:
    """Order-invariant vertex cells from iterated degree/color refinement."""
    sigs = [(m.bit_count(),) for m in nbr]
    rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
    colors = [rank[s] for s in sigs]
    while True:
        sigs = []
        for v in range(n):
            m = nbr[v]
            neigh = []
            while m:
                low = m & -m
                m ^= low
                neigh.append(colors[low.bit_length() - 1])
            neigh.sort()
            sigs.append((colors[v], tuple(neigh)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _canon_code(n: int, nbr: list[int]) -> tuple[int, ...]:
    """Minimum adjacency code over all cell-respecting relabelings.

    Entry p-1 of the result holds the adjacency bits of the vertex at
    position p toward positions 0..p-1, earliest position most significant.
    """
    if n <= 1:
        return ()
    cells = _refine_cells(n, nbr)
    layout: list[int] = []
    for ci, cell in enumerate(cells):
        layout.extend([ci] * len(cell))
    actives: list[tuple[int, ...]] = [(v,) for v in cells[0]]
    code: list[int] = []
    for p in range(1, n):
        cell = cells[layout[p]]
        best_blk = -1
        extended: list[tuple[int, ...]] = []
        for placed in actives:
            for v in cell:
                if v in placed:
                    continue
                blk = 0
                nv = nbr[v]
                for w in placed:
                    blk = (blk << 1) | ((nv >> w) & 1)
                if best_blk < 0 or blk < best_blk:
                    best_blk = blk
                    extended = [placed + (v,)]
                elif blk == best_blk:
                    extended.append(placed + (v,))
        code.append(best_blk)
        actives = extended
    return tuple(code)


def _decode(n: int, code: tuple[int, ...]) -> list[int]:
    nbr = [0] * n
    for p in range(1, n):
        blk = code[p - 1]
        for q in range(p):
            if (blk >> (p - 1 - q)) & 1:
                nbr[p] |= 1 << q
                nbr[q] |= 1 << p
    return nbr


def _graph_from_code(n: int, code: tuple[int, ...]) -> Graph:
    nbr = _decode(n, code)
    adj = []
    for v in range(n):
        m = nbr[v]
        row = []
        while m:
            low = m & -m
            m ^= low
            row.append(low.bit_length() - 1)
        adj.append(tuple(row))
    return Graph(n, tuple(adj))


def canonical_code(graph: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant canonical code; equal codes mean isomorphic graphs."""
    return _canon_code(graph.n, graph.adjacency_masks())


_CLASS_CACHE: dict[tuple[int, int | None], list[tuple[int, ...]]] = {}


def _class_codes(n: int, max_degree: int | None = None) -> list[tuple[int, ...]]:
    key = (n, max_degree)
    if key in _CLASS_CACHE:
        return _CLASS_CACHE[key]
    if n <= 1:
        codes = [()]
    else:
        found: set[tuple[int, ...]] = set()
        for pcode in _class_codes(n - 1, max_degree):
            pnbr = _decode(n - 1, pcode)
            pdeg = [m.bit_count() for m in pnbr]
            for subset in range(1 << (n - 1)):
                if max_degree is not None:
                    if subset.bit_count() > max_degree:
                        continue
                    m = subset
                    ok = True
                    while m:
                        low = m & -m
                        m ^= low
                        if pdeg[low.bit_length() - 1] + 1 > max_degree:
                            ok = False
                            break
                    if not ok:
                        continue
                nbr = list(pnbr)
                m = subset
                while m:
                    low = m & -m
                    m ^= low
                    nbr[low.bit_length() - 1] |= 1 << (n - 1)
                nbr.append(subset)
                found.add(_canon_code(n, nbr))
        codes = sorted(found)
    _CLASS_CACHE[key] = codes
    return codes


def all_graph_classes(n: int, max_degree: int | None = None) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by code.

    Cost grows steeply with n; intended for desk-scale sweeps.  The optional
    degree cap restricts every level of the construction, which keeps e.g.
    the cubic-graph universe tractable a little past the general limit.
    """
    return [_graph_from_code(n, code) for code in _class_codes(n, max_degree)]


def enumerate_graphs(n: int, min_degree: int = 0, connectivity: int = 0) -> list[Graph]:
    """Representatives of all n-vertex classes with the requested floors.

    Built-in enumeration covers 3 <= n <= 8 only; larger instances must be
    ingested as an externally generated graph6 corpus.
    """
    if not 3 <= n <= 8:
        raise GraphError(
            f"built-in enumeration covers 3 <= n <= 8 (got n={n}); "
            "ingest a graph6 corpus for larger graphs"
        )
    out = []
    for g in all_graph_classes(n):
        if min_degree > 0 and min(len(r) for r in g.adj) < min_degree:
            continue
        if connectivity > 0 and not is_k_connected(g, connectivity):
            continue
        out.append(g)
    return out
