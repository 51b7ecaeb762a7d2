import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expdigraph.constructions import VoltageAssignment, expand, lift
from expdigraph.digraph import build_digraph, directed_cycle, metrics
from expdigraph.families import de_bruijn, prop1_voltage
from expdigraph.groups import cyclic_group, product_group
from expdigraph.iso import is_isomorphic
from expdigraph.lineops import (
    ChoiceError,
    CoverageError,
    NotALineDigraphError,
    SearchBudgetExceeded,
    SplitSpec,
    SplitSpecError,
    canonical_form,
    default_choice,
    heuchenne_is_line,
    identity_split,
    line_digraph,
    line_root_search,
    matched_split_spec,
    partial_line_digraph,
    plift_expansion_spec,
    prop4_condition,
    vertex_split,
)
from expdigraph.randgen import random_arc_subset, random_choice, random_covered_digraph, random_digraph

# a->c, b->c, a->d with a,b,c,d = 0,1,2,3
OVERLAP = build_digraph(4, [(0, 2), (1, 2), (0, 3)])
# u->x, u->y, v->x, v->y with u,v,x,y = 0,1,2,3
SQUARE = build_digraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
B21 = de_bruijn(2, 1)
MU3 = (0, 1, 2)  # arcs 00, 01, 10
MU3_CHOICE = {3: 1}  # 11 -> 01


def test_line_digraph_examples():
    c3 = directed_cycle(3)
    assert is_isomorphic(line_digraph(c3), c3) is not None
    assert is_isomorphic(line_digraph(B21), de_bruijn(2, 2)) is not None
    single = line_digraph(build_digraph(2, [(0, 1)]))
    assert (single.n, single.m) == (1, 0)
    assert line_digraph(B21).labels == ("00", "01", "10", "11")


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_line_digraph_size_and_simplicity(seed):
    rng = random.Random(seed)
    g = random_digraph(rng, rng.randint(1, 6), rng.randint(0, 12))
    lg = line_digraph(g)
    assert lg.n == g.m
    assert lg.m == sum(g.in_degree(v) * g.out_degree(v) for v in range(g.n))
    assert lg.is_simple()
    assert heuchenne_is_line(lg)


def test_heuchenne_examples():
    assert heuchenne_is_line(de_bruijn(2, 2))
    assert not heuchenne_is_line(OVERLAP)
    assert heuchenne_is_line(build_digraph(1, []))
    assert not heuchenne_is_line(build_digraph(2, [(0, 1), (0, 1)]))


def test_root_search_examples():
    c3 = directed_cycle(3)
    root = line_root_search(c3)
    assert root is not None and canonical_form(line_digraph(root)) == canonical_form(c3)
    root = line_root_search(de_bruijn(2, 2))
    assert root is not None
    core = build_digraph(root.n, root.arcs)
    # drop isolated vertices before comparing with B(2,1)
    used = sorted({x for a in core.arcs for x in a})
    relabel = {v: i for i, v in enumerate(used)}
    core = build_digraph(len(used), [(relabel[t], relabel[h]) for t, h in core.arcs])
    assert is_isomorphic(core, B21) is not None
    assert line_root_search(OVERLAP, max_root_order=8) is None


def test_root_search_budget():
    with pytest.raises(SearchBudgetExceeded):
        line_root_search(OVERLAP, max_root_order=8, budget=10)


def test_partial_line_digraph_examples():
    g = de_bruijn(2, 2)
    assert partial_line_digraph(g, range(g.m)) == line_digraph(g)
    p = partial_line_digraph(B21, MU3, MU3_CHOICE)
    assert (p.n, p.m) == (3, 6)
    assert metrics(p).diameter == 2
    one_each = [g.in_arcs[v][0] for v in range(g.n)]
    assert partial_line_digraph(g, one_each).n == g.n


def test_partial_line_digraph_errors():
    with pytest.raises(CoverageError):
        partial_line_digraph(B21, [0, 2])  # 00 and 10 both enter vertex 0
    with pytest.raises(ChoiceError):
        partial_line_digraph(B21, MU3, {3: 0})  # 00 enters 0, 11 enters 1
    with pytest.raises(ChoiceError):
        partial_line_digraph(B21, MU3, {})


def test_default_choice_is_lowest_index():
    assert default_choice(B21, MU3) == {3: 1}
    assert default_choice(de_bruijn(2, 2), [0, 1, 2, 3]) == {4: 0, 5: 1, 6: 2, 7: 3}


def test_vertex_split_examples():
    g = de_bruijn(2, 2)
    assert vertex_split(g, identity_split(g)) == g
    full = matched_split_spec(g, range(g.m))
    assert full.iota == tuple(g.in_degree(v) for v in range(g.n))
    # bijective: every copy of every vertex is entered by exactly one arc
    assert len({(h, j) for (_, h), j in zip(g.arcs, full.assign)}) == g.m
    assert is_isomorphic(vertex_split(g, full), line_digraph(g)) is not None
    spec = matched_split_spec(B21, MU3, MU3_CHOICE)
    assert spec.iota == (2, 1)
    assert is_isomorphic(vertex_split(B21, spec), partial_line_digraph(B21, MU3, MU3_CHOICE)) is not None


def test_split_spec_errors():
    with pytest.raises(SplitSpecError):
        vertex_split(B21, SplitSpec((3, 1), (0, 0, 0, 0)))
    with pytest.raises(SplitSpecError):
        vertex_split(B21, SplitSpec((2, 1), (0, 0, 0, 0)))  # copy 1 of vertex 0 never entered
    with pytest.raises(SplitSpecError):
        vertex_split(B21, SplitSpec((2, 1), (0, 1, 1, 0)))  # arc 1 enters copy 1 of vertex 1


def test_plift_expansion_examples():
    g = de_bruijn(2, 2)
    spec = plift_expansion_spec(g, range(g.m))
    assert all(len(set(phi)) == 1 for phi in spec.maps)
    assert is_isomorphic(expand(g, spec).digraph, line_digraph(g)) is not None
    spec = plift_expansion_spec(B21, MU3, MU3_CHOICE)
    assert is_isomorphic(expand(B21, spec).digraph, partial_line_digraph(B21, MU3, MU3_CHOICE)) is not None


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_split_and_expansion_match_partial_line(seed):
    rng = random.Random(seed)
    g = random_covered_digraph(rng, 6)
    es = random_arc_subset(rng, g)
    cf = random_choice(rng, g, es)
    pld = partial_line_digraph(g, es, cf)
    assert pld.n == len(es)
    assert pld.m == sum(g.out_degree(g.arcs[e][1]) for e in es)
    for i, e in enumerate(es):
        assert pld.out_degree(i) == g.out_degree(g.arcs[e][1])
    assert is_isomorphic(vertex_split(g, matched_split_spec(g, es, cf)), pld) is not None
    assert is_isomorphic(expand(g, plift_expansion_spec(g, es, cf)).digraph, pld) is not None


def test_prop4_examples():
    base, va = prop1_voltage(2, 2)
    assert prop4_condition(base, va).holds
    out = lift(base, va).digraph
    assert heuchenne_is_line(out)
    assert is_isomorphic(out, line_digraph(base)) is not None

    bad = VoltageAssignment(cyclic_group(2), (0, 0, 0, 1))
    report = prop4_condition(SQUARE, bad)
    assert not report.holds and report.witness == (0, 1, 2, 3)
    lifted = lift(SQUARE, bad).digraph
    assert lifted.n == 8 and not heuchenne_is_line(lifted)

    G = product_group([cyclic_group(2), cyclic_group(3)])
    for g in (base, SQUARE, de_bruijn(3, 2)):
        assert prop4_condition(g, VoltageAssignment(G, (G.identity,) * g.m)).holds

    with pytest.raises(NotALineDigraphError):
        prop4_condition(OVERLAP, VoltageAssignment(cyclic_group(2), (0, 0, 0)))
