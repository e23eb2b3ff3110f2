"""Executable cycle-exchange and contraction constructions.

``augment_cycle`` splices two off-cycle vertices into an oriented cycle,
producing a cycle two longer that keeps every original cycle vertex (and
hence any forced forest on it).  ``find_augmentation`` searches for the
precondition pattern; on a maximum cycle it must come back empty, which
makes it a cheap maximality certificate.  ``contract_off_cycle`` collapses
every component off the cycle to a single vertex, dropping multi-edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Cycle, Graph, LinearForest, _norm_edge, build_graph


class AugmentationError(ValueError):
    """A precondition of the cycle exchange is violated."""


@dataclass(frozen=True)
class Augmentation:
    """Two off-cycle vertices u, v attachable at cycle positions i, j.

    Positions index ``cycle.verts`` and are read modulo the cycle length;
    u must neighbor verts[i] and verts[j], v must neighbor verts[i+1] and
    verts[j+1], and the four attachment vertices must be pairwise distinct.
    """

    u: int
    v: int
    i: int
    j: int


def _check_augmentation(
    graph: Graph, cycle: Cycle, forest: LinearForest, aug: Augmentation
) -> tuple[int, int, int, int]:
    """Validate all preconditions; return the four attachment vertices."""
    k = len(cycle.verts)
    on_cycle = cycle.vertex_set()
    if aug.u == aug.v:
        raise AugmentationError("the two outside vertices must differ")
    for w in (aug.u, aug.v):
        if not 0 <= w < graph.n:
            raise AugmentationError(f"vertex {w} outside 0..{graph.n - 1}")
        if w in on_cycle:
            raise AugmentationError(f"vertex {w} lies on the cycle")
    i, j = aug.i % k, aug.j % k
    a, a1 = cycle.verts[i], cycle.verts[(i + 1) % k]
    b, b1 = cycle.verts[j], cycle.verts[(j + 1) % k]
    if len({a, a1, b, b1}) != 4:
        raise AugmentationError("the four attachment vertices must be pairwise distinct")
    if not (graph.has_edge(aug.u, a) and graph.has_edge(aug.u, b)):
        raise AugmentationError(f"u={aug.u} must neighbor verts[{i}] and verts[{j}]")
    if not (graph.has_edge(aug.v, a1) and graph.has_edge(aug.v, b1)):
        raise AugmentationError(f"v={aug.v} must neighbor verts[{i}+1] and verts[{j}+1]")
    removed = {_norm_edge(a, a1), _norm_edge(b, b1)}
    for e in forest.edges():
        if e in removed:
            raise AugmentationError("forced edge on exchanged segment")
    return i, j, a, b


def augment_cycle(
    graph: Graph, cycle: Cycle, forest: LinearForest, aug: Augmentation
) -> Cycle:
    """Splice u and v into the cycle; the result is exactly two vertices longer.

    The new cycle walks verts[i], u, verts[j], then backward to verts[i+1],
    then v, then verts[j+1] forward around to verts[i].  Every vertex of the
    original cycle survives, so the forest (its edges excluded from the two
    exchanged cycle edges) is still contained.
    """
    cycle.validate(graph)
    forest.validate(graph)
    i, j, _, _ = _check_augmentation(graph, cycle, forest, aug)
    verts = cycle.verts
    k = len(verts)
    out = [verts[i], aug.u]
    p = j
    while p != i:
        out.append(verts[p])
        p = (p - 1) % k
    out.append(aug.v)
    p = (j + 1) % k
    while p != i:
        out.append(verts[p])
        p = (p + 1) % k
    new_cycle = Cycle(tuple(out))
    new_cycle.validate(graph)
    return new_cycle


def find_augmentation(
    graph: Graph, cycle: Cycle, forest: LinearForest
) -> Augmentation | None:
    """Lexicographically least (u, v, i, j) satisfying the exchange pattern, or None.

    Requires the forest to lie on the cycle (vertices and edges).  On any
    maximum cycle containing the forest the answer is None, since a hit
    would yield a longer such cycle.
    """
    cycle.validate(graph)
    forest.validate(graph)
    on_cycle = cycle.vertex_set()
    if not forest.vertex_set() <= on_cycle:
        raise AugmentationError("forest vertices must lie on the cycle")
    cycle_edges = set(cycle.edges())
    for e in forest.edges():
        if e not in cycle_edges:
            raise AugmentationError("forest edges must be edges of the cycle")
    fedges = set(forest.edges())
    verts = cycle.verts
    k = len(verts)
    outside = sorted(set(range(graph.n)) - on_cycle)
    pos = {v: idx for idx, v in enumerate(verts)}
    for u in outside:
        u_hits = sorted(pos[w] for w in graph.adj[u] if w in pos)
        if len(u_hits) < 2:
            continue
        for v in outside:
            if v == u:
                continue
            v_hits = {pos[w] for w in graph.adj[v] if w in pos}
            for ii in u_hits:
                a, a1 = verts[ii], verts[(ii + 1) % k]
                if (ii + 1) % k not in v_hits:
                    continue
                if _norm_edge(a, a1) in fedges:
                    continue
                for jj in u_hits:
                    if jj == ii:
                        continue
                    b, b1 = verts[jj], verts[(jj + 1) % k]
                    if (jj + 1) % k not in v_hits:
                        continue
                    if len({a, a1, b, b1}) != 4:
                        continue
                    if _norm_edge(b, b1) in fedges:
                        continue
                    return Augmentation(u, v, ii, jj)
    return None


def contract_off_cycle(graph: Graph, cycle: Cycle) -> tuple[Graph, dict[int, int], int]:
    """Contract each component off the cycle to one vertex, dropping multi-edges.

    Returns (contracted graph, old-vertex -> new-vertex map, component
    count).  Cycle vertices keep their relative order; each component is
    represented by its minimum original vertex, and the surviving ids are
    compressed to a dense range.  Edges inside the cycle are unchanged; a
    contracted vertex neighbors a cycle vertex iff some component member
    did.
    """
    cycle.validate(graph)
    on_cycle = cycle.vertex_set()
    comp_of: dict[int, int] = {}
    reps: list[int] = []
    unassigned = set(range(graph.n)) - on_cycle
    while unassigned:
        root = min(unassigned)  # smaller vertices are already assigned, so root = min of its component
        members = {root}
        unassigned.remove(root)
        stack = [root]
        while stack:
            v = stack.pop()
            for u in graph.adj[v]:
                if u in unassigned:
                    unassigned.remove(u)
                    members.add(u)
                    stack.append(u)
        reps.append(root)
        for w in members:
            comp_of[w] = root
    t = len(reps)
    surviving = sorted(on_cycle | set(reps))
    new_id = {old: idx for idx, old in enumerate(surviving)}
    vertex_map = {
        v: new_id[v] if v in on_cycle else new_id[comp_of[v]] for v in range(graph.n)
    }
    edges = set()
    for v in range(graph.n):
        for u in graph.adj[v]:
            if u < v:
                continue
            nu, nv = vertex_map[u], vertex_map[v]
            if nu != nv:
                edges.add(_norm_edge(nu, nv))
    return build_graph(len(surviving), edges), vertex_map, t
