"""Brute-force oracle: frozen totals on hand-checked graphs plus the filter
variants (per-vertex, per-edge, induced) and the cycle finder."""

import pytest

from quadcount import errors
from quadcount.oracle import count_cycles, find_cycle, oracle_all_counts, oracle_count

from helpers import (
    complete_graph,
    cycle_graph,
    diamond_graph,
    graph_from_edges,
    path_graph,
    paw_graph,
    star,
)

# (graph builder, expected non-induced totals in catalogue order)
FROZEN = [
    (lambda: complete_graph(4), (4, 12, 4, 12, 3, 6, 1)),
    (diamond_graph, (2, 6, 2, 4, 1, 1, 0)),
    (paw_graph, (1, 2, 1, 1, 0, 0, 0)),
    (lambda: cycle_graph(4), (0, 4, 0, 0, 1, 0, 0)),
    (lambda: cycle_graph(5), (0, 5, 0, 0, 0, 0, 0)),
    (lambda: path_graph(4), (0, 1, 0, 0, 0, 0, 0)),
    (lambda: star(3), (0, 0, 1, 0, 0, 0, 0)),
    (lambda: star(4), (0, 0, 4, 0, 0, 0, 0)),
    (lambda: complete_graph(5), (10, 60, 20, 60, 15, 30, 5)),
]

ORDER = ("triangle", "path3", "claw", "paw", "c4", "diamond", "k4")


@pytest.mark.parametrize("build,expected", FROZEN)
def test_frozen_totals(build, expected):
    g = build()
    res = oracle_all_counts(g)
    assert tuple(res.subgraph[p] for p in ORDER) == expected


def test_induced_totals_on_diamond():
    res = oracle_all_counts(diamond_graph())
    assert res.induced == {
        "triangle": 2,
        "path3": 0,
        "claw": 0,
        "paw": 0,
        "c4": 0,
        "diamond": 1,
        "k4": 0,
    }


def test_induced_totals_on_c5():
    res = oracle_all_counts(cycle_graph(5))
    assert res.induced["path3"] == 5
    assert sum(res.induced[p] for p in ORDER if p != "path3") == 0


def test_single_pattern_matches_all_counts():
    g = complete_graph(5)
    res = oracle_all_counts(g)
    for p in ORDER:
        assert oracle_count(g, p) == res.subgraph[p]
        assert oracle_count(g, p, induced=True) == res.induced[p]


def test_vertex_filter_k4():
    g = complete_graph(4)
    for v in range(4):
        assert oracle_count(g, "triangle", vertex=v) == 3
        assert oracle_count(g, "diamond", vertex=v) == 6
        assert oracle_count(g, "k4", vertex=v) == 1


def test_vertex_filter_sums():
    # every triangle has 3 vertices, every 4-vertex occurrence has 4
    g = diamond_graph()
    res = oracle_all_counts(g)
    for p in ORDER:
        per_vertex = sum(oracle_count(g, p, vertex=v) for v in g.vertices())
        weight = 3 if p == "triangle" else 4
        assert per_vertex == weight * res.subgraph[p]


def test_vertex_filter_unknown_vertex_is_zero():
    g = complete_graph(4)
    assert oracle_count(g, "triangle", vertex=99) == 0


def test_edge_filter_k4():
    g = complete_graph(4)
    assert oracle_count(g, "triangle", edge=(0, 1)) == 2
    assert oracle_count(g, "path3", edge=(0, 1)) == 6
    assert oracle_count(g, "paw", edge=(0, 1)) == 8
    assert oracle_count(g, "c4", edge=(0, 1)) == 2
    assert oracle_count(g, "diamond", edge=(0, 1)) == 5
    assert oracle_count(g, "k4", edge=(0, 1)) == 1


def test_edge_filter_sums():
    g = complete_graph(5)
    res = oracle_all_counts(g)
    weights = {"triangle": 3, "path3": 3, "claw": 3, "paw": 4, "c4": 4, "diamond": 5, "k4": 6}
    for p in ORDER:
        per_edge = sum(oracle_count(g, p, edge=e) for e in g.edges())
        assert per_edge == weights[p] * res.subgraph[p]


def test_edge_filter_absent_edge_is_zero():
    g = cycle_graph(4)
    assert oracle_count(g, "c4", edge=(0, 2)) == 0


def test_filters_are_mutually_exclusive():
    g = complete_graph(4)
    with pytest.raises(errors.InvalidConfig):
        oracle_count(g, "triangle", vertex=0, edge=(0, 1))


def test_size_limit():
    g = graph_from_edges([], vertices=range(70))
    with pytest.raises(errors.SizeLimit):
        oracle_all_counts(g)
    with pytest.raises(errors.SizeLimit):
        oracle_count(g, "c4")
    assert oracle_count(g, "c4", max_vertices=128) == 0


def test_empty_and_tiny_graphs():
    assert oracle_all_counts(graph_from_edges([])).subgraph == {p: 0 for p in ORDER}
    g = graph_from_edges([(0, 1)])
    assert oracle_all_counts(g).subgraph == {p: 0 for p in ORDER}


def test_find_cycle():
    assert find_cycle(cycle_graph(5), 5)
    assert not find_cycle(cycle_graph(5), 4)
    assert not find_cycle(cycle_graph(5), 3)
    assert find_cycle(complete_graph(4), 3)
    assert find_cycle(complete_graph(4), 4)
    assert not find_cycle(path_graph(6), 5)
    # C6 plus a chord has a 4-cycle and 6-cycle but no 5-cycle
    g = cycle_graph(6)
    g.insert_edge(0, 3)
    assert find_cycle(g, 6)
    assert find_cycle(g, 4)
    assert not find_cycle(g, 5)


def test_count_cycles():
    assert count_cycles(cycle_graph(6), 6) == 1
    assert count_cycles(cycle_graph(6), 4) == 0
    assert count_cycles(complete_graph(4), 3) == 4
    assert count_cycles(complete_graph(4), 4) == 3
    assert count_cycles(path_graph(5), 3) == 0
    # K5 has C(5,3) triangles and 5!/(5*2) five-cycles
    assert count_cycles(complete_graph(5), 3) == 10
    assert count_cycles(complete_graph(5), 5) == 12
    # counts match the pattern oracle where both apply
    g = cycle_graph(6)
    g.insert_edge(0, 3)
    assert count_cycles(g, 4) == oracle_count(g, "c4")
    assert count_cycles(g, 3) == oracle_count(g, "triangle")
