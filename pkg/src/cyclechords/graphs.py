"""Core value types: simple undirected graphs, cycles, and linear forests.

All types are immutable after construction and safe to share between
concurrent workers.  Vertices are dense 0-based ids; external labels are
mapped at the format boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph input (out-of-range vertex, bad edge list)."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class InvalidCycleError(GraphError):
    """A vertex sequence is not a cycle of the host graph."""


class InvalidForestError(GraphError):
    """A path collection is not a linear forest of the host graph."""


Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency tuples.

    Invariants enforced by :func:`build_graph`: no self-loops, no multi-edges,
    and symmetry (u in adj[v] iff v in adj[u]).
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> list[Edge]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def min_degree(self) -> int:
        if self.n == 0:
            raise GraphError("degree undefined for the empty graph")
        return min(len(nbrs) for nbrs in self.adj)

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor bitmasks (bit v set iff v is a neighbor)."""
        return [sum(1 << u for u in nbrs) for nbrs in self.adj]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph from an edge list, deduplicating repeated pairs.

    Raises GraphError for out-of-range endpoints and SelfLoopError for loops.
    Edge order is irrelevant to the result.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle graph needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _canonical_cycle(verts: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least rotation over both orientations.

    All vertices are distinct, so the least form starts at the minimum
    vertex; the result identifies cycles up to rotation and reflection.
    """
    k = len(verts)
    best = None
    for seq in (verts, verts[::-1]):
        start = seq.index(min(seq))
        rot = seq[start:] + seq[:start]
        if best is None or rot < best:
            best = rot
    return best


@dataclass(frozen=True, eq=False)
class Cycle:
    """A cycle as a sequence of >= 3 distinct vertices; order gives orientation.

    Equality and hashing identify cycles up to rotation and reflection so
    that "every longest cycle" quantifications never count an orientation or
    starting point twice.  The stored order is preserved for positional
    index arithmetic.
    """

    verts: tuple[int, ...]
    _canon: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        verts = tuple(self.verts)
        if len(verts) < 3:
            raise InvalidCycleError(f"a cycle needs >= 3 vertices, got {len(verts)}")
        if len(set(verts)) != len(verts):
            raise InvalidCycleError(f"repeated vertex in cycle {verts}")
        object.__setattr__(self, "verts", verts)
        object.__setattr__(self, "_canon", _canonical_cycle(verts))

    def __len__(self) -> int:
        return len(self.verts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self) -> int:
        return hash(self._canon)

    def canonical(self) -> tuple[int, ...]:
        return self._canon

    def reverse(self) -> "Cycle":
        """Same cycle with the opposite orientation."""
        return Cycle(self.verts[::-1])

    def edges(self) -> list[Edge]:
        """Edges along the cycle, normalized with smaller endpoint first."""
        k = len(self.verts)
        return [_norm_edge(self.verts[i], self.verts[(i + 1) % k]) for i in range(k)]

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.verts)

    def validate(self, graph: Graph) -> None:
        """Raise InvalidCycleError unless every consecutive pair is an edge."""
        for v in self.verts:
            if not 0 <= v < graph.n:
                raise InvalidCycleError(f"cycle vertex {v} outside 0..{graph.n - 1}")
        k = len(self.verts)
        for i in range(k):
            u, v = self.verts[i], self.verts[(i + 1) % k]
            if not graph.has_edge(u, v):
                raise InvalidCycleError(f"({u},{v}) is not an edge of the host graph")

    def __repr__(self) -> str:
        return f"Cycle{self.verts}"


@dataclass(frozen=True, eq=False)
class LinearForest:
    """Vertex-disjoint union of paths; a path with one vertex is an isolated vertex."""

    paths: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        paths = tuple(tuple(p) for p in self.paths)
        seen: set[int] = set()
        for p in paths:
            if len(p) == 0:
                raise InvalidForestError("empty path in linear forest")
            if len(set(p)) != len(p):
                raise InvalidForestError(f"repeated vertex within path {p}")
            if seen & set(p):
                raise InvalidForestError("paths of a linear forest must be vertex-disjoint")
            seen.update(p)
        object.__setattr__(self, "paths", paths)

    @classmethod
    def empty(cls) -> "LinearForest":
        return cls(())

    @classmethod
    def from_edge(cls, u: int, v: int) -> "LinearForest":
        return cls(((u, v),))

    @classmethod
    def from_vertices(cls, verts: Iterable[int]) -> "LinearForest":
        return cls(tuple((v,) for v in verts))

    @property
    def edge_count(self) -> int:
        return sum(len(p) - 1 for p in self.paths)

    @property
    def isolated_count(self) -> int:
        return sum(1 for p in self.paths if len(p) == 1)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    def edges(self) -> list[Edge]:
        out = []
        for p in self.paths:
            out.extend(_norm_edge(p[i], p[i + 1]) for i in range(len(p) - 1))
        return out

    def is_empty(self) -> bool:
        return not self.paths

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearForest):
            return NotImplemented
        return sorted(self.paths) == sorted(other.paths)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.paths)))

    def validate(self, graph: Graph) -> None:
        for p in self.paths:
            for v in p:
                if not 0 <= v < graph.n:
                    raise InvalidForestError(f"forest vertex {v} outside 0..{graph.n - 1}")
            for i in range(len(p) - 1):
                if not graph.has_edge(p[i], p[i + 1]):
                    raise InvalidForestError(
                        f"({p[i]},{p[i + 1]}) is not an edge of the host graph"
                    )

    def __repr__(self) -> str:
        return f"LinearForest{self.paths}"


@dataclass(frozen=True)
class GraphStats:
    """Structural summary produced by :func:`analyze`."""

    n: int
    m: int
    min_degree: int
    max_degree: int
    connected: bool
    two_connected: bool
    three_connected: bool
    components: int


def components(graph: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * graph.n
    out = []
    for s in range(graph.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in graph.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def _connected_after_removal(graph: Graph, removed: frozenset[int]) -> bool:
    remaining = [v for v in range(graph.n) if v not in removed]
    if not remaining:
        return True
    seen = {remaining[0]}
    stack = [remaining[0]]
    while stack:
        v = stack.pop()
        for u in graph.adj[v]:
            if u not in removed and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(remaining)


def is_k_connected(graph: Graph, k: int) -> bool:
    """Exhaustive vertex-cut check: no set of < k vertices disconnects the graph.

    Correct for n >= k + 1; returns False for smaller graphs.  Intended for
    small instances (subset enumeration is exponential in k).
    """
    if k <= 0:
        return True
    if graph.n < k + 1:
        return False
    for size in range(k):
        for cut in combinations(range(graph.n), size):
            if not _connected_after_removal(graph, frozenset(cut)):
                return False
    return True


def analyze(graph: Graph) -> GraphStats:
    """Pure structural statistics; raises GraphError on the 0-vertex graph."""
    if graph.n == 0:
        raise GraphError("no statistics defined for a graph with no vertices")
    degs = [len(nbrs) for nbrs in graph.adj]
    comps = components(graph)
    return GraphStats(
        n=graph.n,
        m=graph.m,
        min_degree=min(degs),
        max_degree=max(degs),
        connected=len(comps) == 1,
        two_connected=is_k_connected(graph, 2),
        three_connected=is_k_connected(graph, 3),
        components=len(comps),
    )
