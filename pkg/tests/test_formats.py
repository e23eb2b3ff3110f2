import pytest
from hypothesis import given, settings, strategies as st

from cyclechords import (
    Cycle,
    Graph6Error,
    build_graph,
    complete_graph,
    cycle_graph,
    emit_graph6,
    export_dot,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
)

from conftest import random_graph


def test_fixed_vectors():
    assert emit_graph6(complete_graph(4)) == "C~"
    assert parse_graph6("C~") == complete_graph(4)
    assert emit_graph6(cycle_graph(5)) == "Dhc"
    assert parse_graph6("Dhc") == cycle_graph(5)
    assert emit_graph6(build_graph(1, [])) == "@"
    empty4 = parse_graph6("C?")
    assert empty4.n == 4 and empty4.m == 0


def test_header_tolerated():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_roundtrip_random_graphs(rng):
    for _ in range(1000):
        g = random_graph(rng, rng.randrange(0, 21), rng.random())
        line = emit_graph6(g)
        assert parse_graph6(line) == g
        assert emit_graph6(parse_graph6(line)) == line


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=15), st.data())
def test_roundtrip_property(n, data):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if data.draw(st.booleans()):
                edges.append((u, v))
    g = build_graph(n, edges)
    assert parse_graph6(emit_graph6(g)) == g


def test_multibyte_size_prefix():
    for n in (63, 64, 100):
        g = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
        assert parse_graph6(emit_graph6(g)) == g


def test_emit_rejects_oversized():
    class Fake:
        n = 258048
    with pytest.raises(Graph6Error):
        emit_graph6(Fake())


def test_parser_rejects_out_of_range_corruptions():
    for line in ("C~", "Dhc", emit_graph6(complete_graph(7))):
        for i in range(len(line)):
            for bad in (chr(32), chr(62), chr(127)):
                corrupted = line[:i] + bad + line[i + 1:]
                with pytest.raises(Graph6Error):
                    parse_graph6(corrupted)


def test_parser_rejects_truncation_and_garbage():
    with pytest.raises(Graph6Error):
        parse_graph6("D")  # needs 2 data chars for n=5
    with pytest.raises(Graph6Error):
        parse_graph6("C~~")  # one char too many for n=4
    with pytest.raises(Graph6Error):
        parse_graph6("")


def test_parser_rejects_nonzero_padding():
    # n=2 uses 1 data bit + 5 padding bits; 'A' + chr(63+1) sets a padding bit
    with pytest.raises(Graph6Error):
        parse_graph6("A" + chr(63 + 1))


def test_iter_graph6():
    text = "C~\n\nDhc\n"
    graphs = list(iter_graph6(text))
    assert graphs == [complete_graph(4), cycle_graph(5)]


def test_parse_edge_list():
    g = parse_edge_list("# a triangle plus declared isolate\nn=4\n0 1\n1 2\n0,2\n")
    assert g.n == 4 and g.m == 3
    g2 = parse_edge_list("0 1\n1 2\n")
    assert g2.n == 3


def test_export_dot_styles_cycle_and_chords():
    k4 = complete_graph(4)
    ham = Cycle((0, 1, 2, 3))
    dot = export_dot(k4, ham, [(0, 2), (1, 3)])
    assert dot.count("color=red") == 4
    assert dot.count("color=blue") == 2
    assert dot == export_dot(k4, ham, [(0, 2), (1, 3)])  # deterministic


def test_export_dot_plain_and_isolated():
    dot = export_dot(cycle_graph(5))
    assert dot.count(" -- ") == 5
    assert "color=" not in dot
    dot2 = export_dot(build_graph(2, []))
    assert "  0;" in dot2 and "  1;" in dot2 and " -- " not in dot2


def test_export_dot_rejects_foreign_cycle():
    from cyclechords import InvalidCycleError

    with pytest.raises(InvalidCycleError):
        export_dot(cycle_graph(5), Cycle((0, 1, 3)))
