"""Generators for the extremal graph constructions, with designated witnesses.

Vertex numbering is deterministic per family so graph6 output, DOT exports,
and golden values stay stable:

* ``FIGURE1(k)``: ring of 5k vertices ``0..5k-1``; hub i (of k) gets id
  ``5k + i`` and neighbors ring positions ``5i, 5i+2, 5i+4``; ring positions
  ``5i+1`` and ``5i+3`` each carry a K4 whose three extra vertices start at
  ``6k + 6i`` (first attachment) and ``6k + 6i + 3`` (second).  n = 12k.
  The designated witness is the chordless ring cycle of length 5k.
* ``WHEEL_K4(k)``: hub 0; rim vertices ``1..k``; the rim edge after rim
  vertex i is subdivided by vertex ``k + i``; each subdivision vertex
  carries a K4 with extras starting at ``2k + 1 + 3(i-1)``.  n = 5k + 1.
  The designated witness is the subdivided rim cycle of length 2k.
* ``TWO_CYCLE_BIPARTITE(n)``: cycle on ``0..n-1``, cycle on ``n..2n-1``,
  plus all edges between the two sides; the designated witness is the bond
  across that bipartition (n^2 edges).
* ``WHEEL(r)``: hub 0 joined to a rim cycle ``1..r``.
* ``PETERSEN``: outer 5-cycle 0..4, spokes to 5..9, inner 5-step-2 ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .cographic import Bond, bond_from_partition
from .graphs import Cycle, Graph, GraphError, build_graph
from .search import circumference


class Family(Enum):
    FIGURE1 = "figure1"
    WHEEL_K4 = "wheel-k4"
    TWO_CYCLE_BIPARTITE = "two-cycle-bipartite"
    WHEEL = "wheel"
    PETERSEN = "petersen"


#: families small enough to verify the designated cycle against the engine
_VERIFY_LIMIT = {Family.FIGURE1: 2, Family.WHEEL_K4: 6}


@dataclass(frozen=True)
class FamilyOutput:
    """A generated graph plus its designated witness metadata.

    ``cycle_is_longest`` is True/False when the designated cycle was checked
    against the exact engine at generation time, None when left unverified
    (large parameters).
    """

    family: Family
    param: int
    graph: Graph
    cycle: Cycle | None = None
    bond: Bond | None = None
    cycle_is_longest: bool | None = None


def figure1(k: int) -> tuple[Graph, Cycle]:
    if k < 1:
        raise GraphError(f"figure1 family needs k >= 1, got {k}")
    ring = 5 * k
    edges = [(i, (i + 1) % ring) for i in range(ring)]
    for i in range(k):
        hub = ring + i
        edges.extend((hub, 5 * i + off) for off in (0, 2, 4))
        for slot, attach_off in enumerate((1, 3)):
            attach = 5 * i + attach_off
            extras = [6 * k + 6 * i + 3 * slot + j for j in range(3)]
            edges.extend(combinations([attach] + extras, 2))
    return build_graph(12 * k, edges), Cycle(tuple(range(ring)))


def wheel_k4(k: int) -> tuple[Graph, Cycle]:
    if k < 3:
        raise GraphError(f"wheel-k4 family needs k >= 3, got {k}")
    edges = []
    for i in range(1, k + 1):
        edges.append((0, i))
        sub = k + i
        edges.append((i, sub))
        edges.append((sub, i % k + 1))
        extras = [2 * k + 1 + 3 * (i - 1) + j for j in range(3)]
        edges.extend(combinations([sub] + extras, 2))
    rim = []
    for i in range(1, k + 1):
        rim.extend((i, k + i))
    return build_graph(5 * k + 1, edges), Cycle(tuple(rim))


def two_cycle_bipartite(n: int) -> tuple[Graph, Bond]:
    if n < 3:
        raise GraphError(f"two-cycle-bipartite family needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(x, n + y) for x in range(n) for y in range(n)]
    graph = build_graph(2 * n, edges)
    return graph, bond_from_partition(graph, frozenset(range(n)))


def wheel(rim: int) -> Graph:
    if rim < 3:
        raise GraphError(f"wheel needs rim size >= 3, got {rim}")
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return build_graph(rim + 1, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def gen_family(family: Family, param: int = 0, verify: bool = True) -> FamilyOutput:
    """Generate a family member; small designated cycles are engine-checked.

    ``verify`` controls whether the designated cycle is compared against the
    exact circumference (only attempted below the per-family size limit;
    above it the flag stays None, meaning unverified).
    """
    if family is Family.FIGURE1:
        graph, cyc = figure1(param)
    elif family is Family.WHEEL_K4:
        graph, cyc = wheel_k4(param)
    elif family is Family.TWO_CYCLE_BIPARTITE:
        graph, bond = two_cycle_bipartite(param)
        return FamilyOutput(family, param, graph, bond=bond)
    elif family is Family.WHEEL:
        return FamilyOutput(family, param, wheel(param))
    elif family is Family.PETERSEN:
        return FamilyOutput(family, param, petersen())
    else:
        raise GraphError(f"unknown family {family!r}")
    flag = None
    if verify and param <= _VERIFY_LIMIT[family]:
        result = circumference(graph)
        flag = result is not None and result[0] == len(cyc)
    return FamilyOutput(family, param, graph, cycle=cyc, cycle_is_longest=flag)
