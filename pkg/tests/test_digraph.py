from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expdigraph.digraph import (
    MalformedInputError,
    all_pairs_distances,
    build_digraph,
    directed_cycle,
    is_strongly_connected,
    metrics,
)
from expdigraph.families import de_bruijn

from conftest import floyd_warshall


@st.composite
def digraphs(draw, max_n=6, max_m=14):
    n = draw(st.integers(1, max_n))
    arcs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    return build_digraph(n, arcs)


def test_build_keeps_arc_order():
    g = build_digraph(2, [(0, 1)])
    assert (g.n, g.m) == (2, 1)
    assert g.labels == ("0", "1")
    g = build_digraph(2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert g == de_bruijn(2, 1)
    assert g.arcs[2] == (1, 0)


def test_build_rejects_out_of_range():
    with pytest.raises(MalformedInputError):
        build_digraph(1, [(0, 1)])


def test_loops_and_parallel_arcs_are_allowed():
    g = build_digraph(2, [(0, 0), (0, 1), (0, 1)])
    assert g.loops(0) == 1
    assert g.multiplicity[(0, 1)] == 2
    assert not g.is_simple()
    assert g.out_degree(0) == 3 and g.out_neighbors(0) == {0, 1}


def test_distances_examples():
    assert all_pairs_distances(directed_cycle(3))[0][2] == 2
    b22 = de_bruijn(2, 2)
    i00, i11 = b22.labels.index("00"), b22.labels.index("11")
    assert all_pairs_distances(b22)[i00][i11] == floyd_warshall(b22)[i00][i11] == 2
    assert all_pairs_distances(build_digraph(1, [])) == [[0]]


def test_unreachable_marker():
    d = all_pairs_distances(build_digraph(2, [(0, 1)]))
    assert d[1][0] is None and d[0][1] == 1


def test_metrics_examples():
    m = metrics(de_bruijn(2, 1))
    assert (m.diameter, m.mean_distance) == (1, 1)
    for n in range(2, 8):
        m = metrics(directed_cycle(n))
        assert m.diameter == n - 1
        assert m.mean_distance == Fraction(n, 2)
    assert metrics(de_bruijn(2, 2)).diameter == 2


def test_metrics_absent_without_strong_connectivity():
    m = metrics(build_digraph(3, [(0, 1), (1, 2)]))
    assert m.diameter is None and m.mean_distance is None
    assert (m.min_in, m.max_in, m.min_out, m.max_out) == (0, 1, 0, 1)


@given(digraphs())
def test_degree_sums(g):
    assert sum(g.out_degree(v) for v in range(g.n)) == g.m
    assert sum(g.in_degree(v) for v in range(g.n)) == g.m


@given(digraphs())
def test_bfs_matches_floyd_warshall(g):
    assert all_pairs_distances(g) == floyd_warshall(g)


@settings(max_examples=200)
@given(digraphs())
def test_distance_axioms(g):
    d = all_pairs_distances(g)
    for u in range(g.n):
        assert d[u][u] == 0
        for v in range(g.n):
            assert (d[u][v] == 1) == (u != v and (u, v) in g.multiplicity)
    if is_strongly_connected(g):
        for u in range(g.n):
            for v in range(g.n):
                for w in range(g.n):
                    assert d[u][w] <= d[u][v] + d[v][w]
        m = metrics(g, d)
        assert m.mean_distance <= m.diameter
