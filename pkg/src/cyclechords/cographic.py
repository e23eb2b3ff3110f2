"""Bonds, cographic rank, and rank-closure chords.

A bond of a connected graph is a minimal edge cut; equivalently, both sides
of the inducing vertex bipartition are connected.  Bonds are the circuits
of the cographic matroid, whose rank function is

    r*(A) = |A| + r(E \\ A) - r(E),     r(S) = n - components((V, S)).

An edge outside a bond is reported as a chord when adding it leaves the
cographic rank unchanged (closure membership by the rank formula).  Note
that a bridge of the graph vacuously passes this test on every set; such
edges are reported as-is, which keeps the tree-side rule uniform: every
edge of a tree-shaped bond side is a chord of that bond.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphs import Graph, GraphError, _norm_edge, components

Edge = tuple[int, int]


class BondError(ValueError):
    """A vertex bipartition whose edge cut is not a bond, or a bad rank query."""


@dataclass(frozen=True)
class Bond:
    """Minimal edge cut given by one side of a vertex bipartition."""

    side_x: frozenset[int]
    edges: frozenset[Edge]

    @property
    def size(self) -> int:
        return len(self.edges)


def graphic_rank(graph: Graph, edge_set: Iterable[Edge]) -> int:
    """Rank of an edge set in the graphic matroid: n - components((V, S))."""
    parent = list(range(graph.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = graph.n
    for u, v in edge_set:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return graph.n - comps


def cographic_rank(graph: Graph, edge_set: Iterable[Edge]) -> int:
    """r*(A) = |A| + r(E \\ A) - r(E); requires a connected graph and A within E."""
    all_edges = set(graph.edges())
    subset = {_norm_edge(u, v) for u, v in edge_set}
    if not subset <= all_edges:
        raise BondError(f"edge set contains non-edges: {sorted(subset - all_edges)}")
    if graphic_rank(graph, all_edges) != graph.n - 1:
        raise BondError("cographic rank requires a connected graph")
    return len(subset) + graphic_rank(graph, all_edges - subset) - (graph.n - 1)


def _induces_connected(graph: Graph, side: frozenset[int]) -> bool:
    start = next(iter(side))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in graph.adj[v]:
            if u in side and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(side)


def bond_from_partition(graph: Graph, side_x: Iterable[int]) -> Bond:
    """The bond induced by (side_x, complement); both sides must induce connected subgraphs."""
    side = frozenset(side_x)
    if not side or side == frozenset(range(graph.n)):
        raise BondError("side_x must be a nonempty proper vertex subset")
    if not all(0 <= v < graph.n for v in side):
        raise BondError("side_x contains out-of-range vertices")
    if len(components(graph)) != 1:
        raise BondError("bonds are defined for connected graphs")
    other = frozenset(range(graph.n)) - side
    if not _induces_connected(graph, side) or not _induces_connected(graph, other):
        raise BondError("edge cut is not a bond: a side induces a disconnected subgraph")
    cut = frozenset(
        _norm_edge(u, v) for u, v in graph.edges() if (u in side) != (v in side)
    )
    return Bond(side, cut)


def chords_of_bond(graph: Graph, bond: Bond) -> frozenset[Edge]:
    """Edges outside the bond whose addition leaves the cographic rank unchanged."""
    base = cographic_rank(graph, bond.edges)
    chords = []
    for e in graph.edges():
        if e in bond.edges:
            continue
        if cographic_rank(graph, set(bond.edges) | {e}) == base:
            chords.append(e)
    return frozenset(chords)


def max_bond(graph: Graph, limit: int = 16) -> tuple[int, Bond]:
    """Largest bond by exhaustive bipartition search (fix vertex 0 on side X).

    Ties resolve to the lexicographically least side; instances above
    ``limit`` vertices are rejected (the search is exponential).
    """
    if len(components(graph)) != 1:
        raise BondError("bonds are defined for connected graphs")
    if graph.n > limit:
        raise BondError(f"exhaustive bond search limited to n <= {limit}")
    if graph.n < 2:
        raise BondError("no bond exists on fewer than 2 vertices")
    best: Bond | None = None
    rest = list(range(1, graph.n))
    for r in range(len(rest)):
        for extra in combinations(rest, r):
            side = frozenset((0,) + extra)
            try:
                bond = bond_from_partition(graph, side)
            except BondError:
                continue
            if (
                best is None
                or bond.size > best.size
                or (bond.size == best.size and sorted(bond.side_x) < sorted(best.side_x))
            ):
                best = bond
    if best is None:
        raise BondError("graph has no bond")
    return best.size, best


def tree_sides(graph: Graph, bond: Bond) -> list[frozenset[int]]:
    """The bond sides that induce trees (|edges| = |side| - 1)."""
    out = []
    for side in (bond.side_x, frozenset(range(graph.n)) - bond.side_x):
        inside = sum(1 for u, v in graph.edges() if u in side and v in side)
        if inside == len(side) - 1:
            out.append(side)
    return out


def describe_bond(graph: Graph, bond: Bond, with_chords: bool = True) -> dict:
    """Report dict used by the CLI: size, capacity bound, chords, degeneracy flags.

    ``edgeless_tree_side`` flags the degenerate near-maximum case where a
    bond of size >= m - n + 1 has a single-vertex (edgeless) tree side, so
    the tree-side chord rule produces nothing.
    """
    p = graph.m - graph.n + 2
    trees = tree_sides(graph, bond)
    chords = sorted(chords_of_bond(graph, bond)) if with_chords else None
    report = {
        "side_x": sorted(bond.side_x),
        "size": bond.size,
        "max_possible": p,
        "tree_side_count": len(trees),
        "edgeless_tree_side": bond.size >= p - 1
        and any(len(side) == 1 for side in trees),
    }
    if with_chords:
        report["chords"] = [list(e) for e in chords]
        report["chordless"] = not chords
    return report
