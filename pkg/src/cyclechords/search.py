"""Exact longest-cycle computation and chord detection.

The engine is a depth-first branch-and-bound over simple paths with an
admissible completion bound: a path from start ``s`` to endpoint ``c`` can
only be closed through unvisited vertices that (a) survive iterated removal
of vertices with fewer than two available contacts and (b) are reachable
from both ``c`` and ``s`` inside the unvisited set.  The bound never
underestimates the best completion, so results are exact; it is never a
heuristic.

Enumeration of all maximum cycles runs in two phases: first the maximum
length, then a second sweep collecting every cycle of exactly that length.
Cycles are deduplicated up to rotation and reflection.  Start vertices are
restricted to the minimum vertex of each cycle, which breaks symmetry
without losing any cycle.
"""

from __future__ import annotations

import time
from collections import defaultdict

from .graphs import Cycle, Graph, LinearForest, _norm_edge


class SearchBudgetExceeded(Exception):
    """The time budget ran out; callers must treat this as inconclusive."""


class _Clock:
    __slots__ = ("deadline", "count")

    def __init__(self, budget_ms: float | None):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.count = 0

    def tick(self) -> None:
        if self.deadline is None:
            return
        self.count += 1
        if self.count & 1023 == 1 and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("cycle search exceeded its time budget")


class _Explorer:
    """Single-threaded search instance over one graph and one forced forest."""

    def __init__(self, graph: Graph, forest: LinearForest, clock: _Clock):
        self.n = graph.n
        self.nbr = graph.adjacency_masks()
        self.clock = clock
        self.fedges = frozenset(forest.edges())
        self.fverts_mask = 0
        for v in forest.vertex_set():
            self.fverts_mask |= 1 << v
        self.fpartners: dict[int, list[int]] = defaultdict(list)
        for a, b in self.fedges:
            self.fpartners[a].append(b)
            self.fpartners[b].append(a)

    # -- completion bound ---------------------------------------------------

    def _spread(self, seeds: int, free: int) -> int:
        seen = seeds & free
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= self.nbr[low.bit_length() - 1]
            nxt &= free & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def _completion_bound(self, path_len: int, free: int, c: int, s: int, need: int) -> int:
        """Upper bound on the best qualifying cycle length; -1 means impossible."""
        cs = (1 << c) | (1 << s)
        cur = free
        while True:
            drop = 0
            m = cur
            while m:
                low = m & -m
                m ^= low
                if (self.nbr[low.bit_length() - 1] & (cur | cs)).bit_count() < 2:
                    drop |= low
            if not drop:
                break
            cur &= ~drop
        interior = self._spread(self.nbr[c] & cur, cur) & self._spread(self.nbr[s] & cur, cur)
        if need & ~interior:
            return -1
        return path_len + interior.bit_count()

    # -- depth-first search -------------------------------------------------

    def run(self, target: int | None):
        """target None: return (max_len, witness_path).  target L: return path set."""
        self.target = target
        self.best_len = 0
        self.best_path: tuple[int, ...] | None = None
        self.collected: set[tuple[int, ...]] = set()
        if self.fverts_mask:
            last_start = (self.fverts_mask & -self.fverts_mask).bit_length() - 1
        else:
            last_start = self.n - 1
        full = (1 << self.n) - 1
        for s in range(last_start + 1):
            avail = full & ~((1 << (s + 1)) - 1)
            limit = avail.bit_count() + 1
            if target is None and limit <= self.best_len:
                break
            if target is not None and limit < target:
                break
            self.s = s
            self.path = [s]
            self.onpath = 1 << s
            self.sat_edges: set[tuple[int, int]] = set()
            self._extend(avail & self.nbr[s], avail)
        if target is None:
            return self.best_len, self.best_path
        return self.collected

    def _qualifies(self, c: int) -> bool:
        if self.fverts_mask & ~self.onpath:
            return False
        done = len(self.sat_edges)
        closing = _norm_edge(c, self.s)
        if closing in self.fedges:
            done += 1
        return done == len(self.fedges)

    def _extend(self, cands: int, free: int) -> None:
        self.clock.tick()
        path = self.path
        c = path[-1]
        depth = len(path)
        s = self.s
        # closure: each cycle is emitted once, with its minimum vertex first
        # and the lesser neighbor second (collapses rotation and reflection)
        if depth >= 3 and (self.nbr[c] >> s) & 1 and path[1] < c and self._qualifies(c):
            if self.target is None:
                if depth > self.best_len:
                    self.best_len = depth
                    self.best_path = tuple(path)
            elif depth == self.target:
                self.collected.add(tuple(path))
        if self.target is not None and depth >= self.target:
            return
        if self.target is None:
            if depth + free.bit_count() <= self.best_len:
                return
        elif depth + free.bit_count() < self.target:
            return
        # a pending forced edge at the endpoint pins the next vertex; at the
        # start vertex the closing edge is a second chance, so no pinning there
        if depth >= 2 and c in self.fpartners:
            pend = [w for w in self.fpartners[c] if _norm_edge(c, w) not in self.sat_edges]
            if len(pend) >= 2:
                return
            if pend:
                w = pend[0]
                if (self.onpath >> w) & 1:
                    return  # only the closing edge could satisfy it; closure already tried
                cands &= 1 << w
        if not cands:
            return
        # the reachability bound only pays for itself on larger free sets;
        # skipping it is safe (it is a prune, never a filter)
        if free.bit_count() >= 7:
            need = self.fverts_mask & ~self.onpath
            bound = self._completion_bound(depth, free, c, s, need)
            if bound < 0:
                return
            if self.target is None:
                if bound <= self.best_len:
                    return
            elif bound < self.target:
                return
        m = cands
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            if v in self.fpartners:
                blocked = False
                for w in self.fpartners[v]:
                    if (self.onpath >> w) & 1 and w != c and w != s:
                        blocked = True  # {v,w} can never become consecutive
                        break
                if blocked:
                    continue
                if depth == 1:
                    start_pend = [w for w in self.fpartners.get(s, ()) if w != v]
                    if len(start_pend) >= 2:
                        continue
            edge = _norm_edge(c, v)
            added = edge in self.fedges
            path.append(v)
            self.onpath |= low
            if added:
                self.sat_edges.add(edge)
            nfree = free & ~low
            self._extend(self.nbr[v] & nfree, nfree)
            if added:
                self.sat_edges.discard(edge)
            self.onpath &= ~low
            path.pop()


def longest_cycle(
    graph: Graph,
    forest: LinearForest | None = None,
    budget_ms: float | None = None,
) -> tuple[int, Cycle] | None:
    """Maximum length over cycles containing ``forest``, with one witness.

    Returns None when no such cycle exists.
    """
    forest = forest if forest is not None else LinearForest.empty()
    forest.validate(graph)
    clock = _Clock(budget_ms)
    length, path = _Explorer(graph, forest, clock).run(None)
    if length == 0:
        return None
    return length, Cycle(path)


def circumference(graph: Graph, budget_ms: float | None = None) -> tuple[int, Cycle] | None:
    """Exact maximum cycle length with a witness, or None for acyclic graphs."""
    return longest_cycle(graph, None, budget_ms)


def longest_cycles_all(
    graph: Graph,
    forest: LinearForest | None = None,
    budget_ms: float | None = None,
) -> tuple[int, frozenset[Cycle]]:
    """All maximum-length cycles containing every edge and vertex of ``forest``.

    Returns (0, empty set) when no cycle contains the forest.  The result is
    deduplicated up to rotation and reflection.
    """
    forest = forest if forest is not None else LinearForest.empty()
    forest.validate(graph)
    clock = _Clock(budget_ms)
    explorer = _Explorer(graph, forest, clock)
    length, _ = explorer.run(None)
    if length == 0:
        return 0, frozenset()
    paths = explorer.run(length)
    return length, frozenset(Cycle(p) for p in paths)


def chords_of_cycle(graph: Graph, cycle: Cycle) -> frozenset[tuple[int, int]]:
    """Edges of the graph joining two non-consecutive vertices of the cycle."""
    cycle.validate(graph)
    pos = {v: i for i, v in enumerate(cycle.verts)}
    k = len(cycle.verts)
    chords = []
    for u in cycle.verts:
        for w in graph.adj[u]:
            if u < w and w in pos:
                gap = (pos[w] - pos[u]) % k
                if gap != 1 and gap != k - 1:
                    chords.append((u, w))
    return frozenset(chords)
