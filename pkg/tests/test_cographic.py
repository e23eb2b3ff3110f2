import pytest

from cyclechords import (
    BondError,
    bond_from_partition,
    build_graph,
    chords_of_bond,
    cographic_rank,
    complete_graph,
    cycle_graph,
    describe_bond,
    graphic_rank,
    max_bond,
    tree_sides,
    two_cycle_bipartite,
)

import oracles
from cyclechords.census import all_graph_classes
from cyclechords.graphs import is_k_connected


def test_cographic_rank_examples():
    k4 = complete_graph(4)
    assert cographic_rank(k4, []) == 0
    assert cographic_rank(k4, [(0, 1), (0, 2), (0, 3)]) == 2
    assert cographic_rank(k4, k4.edges()) == 3  # m - n + 1


def test_cographic_rank_rejects_non_edges_and_disconnected():
    k4 = complete_graph(4)
    with pytest.raises(BondError):
        cographic_rank(k4, [(0, 4)])
    two_triangles = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(BondError):
        cographic_rank(two_triangles, [(0, 1)])


def test_bond_from_partition():
    g, _ = two_cycle_bipartite(3)
    bond = bond_from_partition(g, range(3))
    assert bond.size == 9
    star = bond_from_partition(complete_graph(4), [0])
    assert star.size == 3
    path = build_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(BondError, match="not a bond"):
        bond_from_partition(path, [0, 2])


def test_bond_partition_validation():
    k4 = complete_graph(4)
    with pytest.raises(BondError):
        bond_from_partition(k4, [])
    with pytest.raises(BondError):
        bond_from_partition(k4, range(4))


def test_bonds_are_circuits():
    # r*(B) = |B| - 1 over every bond of a sample of small graphs
    for g in (complete_graph(4), cycle_graph(5), two_cycle_bipartite(3)[0]):
        for side, cut in oracles.all_bond_partitions(g):
            bond = bond_from_partition(g, side)
            assert bond.edges == cut
            assert cographic_rank(g, bond.edges) == bond.size - 1


def test_chords_of_bond_k4_star_is_empty_but_flagged():
    k4 = complete_graph(4)
    star = bond_from_partition(k4, [0])
    assert chords_of_bond(k4, star) == frozenset()
    report = describe_bond(k4, star)
    assert report["chordless"] is True
    assert report["edgeless_tree_side"] is True


def test_chords_of_bond_two_cycle_bipartite_empty():
    g, bond = two_cycle_bipartite(3)
    assert chords_of_bond(g, bond) == frozenset()
    report = describe_bond(g, bond)
    assert report["edgeless_tree_side"] is False


def test_tree_side_edges_are_chords():
    # bond across K4 and a pendant triangle-with-tail: tree side {4,5} picks up its edge
    g = build_graph(
        6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 3)]
    )
    bond = bond_from_partition(g, [0, 1, 2, 3])
    assert bond.size == 2
    trees = tree_sides(g, bond)
    assert frozenset({4, 5}) in trees
    assert (4, 5) in chords_of_bond(g, bond)


def test_max_bond_examples():
    size, bond = max_bond(complete_graph(4))
    assert size == 4
    assert len(bond.side_x) == 2
    assert max_bond(cycle_graph(5))[0] == 2
    g, designated = two_cycle_bipartite(3)
    size, witness = max_bond(g)
    assert size == 9 == designated.size


def test_max_bond_guards():
    with pytest.raises(BondError):
        max_bond(build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    with pytest.raises(BondError):
        max_bond(complete_graph(4), limit=3)


def test_bond_size_bound_and_tree_side_rule_small_census():
    # every connected graph on up to 6 vertices: max bond <= m - n + 2 and
    # every edge of every tree-shaped bond side is a chord of that bond
    for n in range(2, 7):
        for g in all_graph_classes(n):
            if not is_k_connected(g, 1):
                continue
            p = g.m - g.n + 2
            best = 0
            for side, _ in oracles.all_bond_partitions(g):
                bond = bond_from_partition(g, side)
                best = max(best, bond.size)
                chords = chords_of_bond(g, bond)
                for tree in tree_sides(g, bond):
                    for u, v in g.edges():
                        if u in tree and v in tree:
                            assert (u, v) in chords
            assert best <= p
            if g.n >= 2:
                assert max_bond(g)[0] == best
