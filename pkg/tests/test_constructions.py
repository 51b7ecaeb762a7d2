import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from expdigraph.constructions import (
    ExpansionSpec,
    VoltageAssignment,
    bouquet,
    cayley_digraph,
    coset_digraph,
    expand,
    expanded_coset_digraph,
    lift,
    translation_spec,
)
from expdigraph.digraph import MalformedInputError, build_digraph, directed_cycle
from expdigraph.families import de_bruijn, prop1_voltage
from expdigraph.groups import InvalidSubgroupError, cyclic_group, product_group
from expdigraph.iso import is_isomorphic
from expdigraph.partitions import check_regular
from expdigraph.randgen import random_digraph, random_voltages


def same_arcs(a, b):
    """Same vertex set and arc multiset; arc order may differ."""
    return a.n == b.n and sorted(a.arcs) == sorted(b.arcs)


def test_trivial_expansion_is_the_base():
    g = de_bruijn(2, 2)
    spec = ExpansionSpec((1,) * g.n, ((0,),) * g.m)
    assert expand(g, spec).digraph == g


def test_swap_on_a_loop_gives_a_two_cycle():
    out = expand(bouquet(1), ExpansionSpec((2,), ((1, 0),))).digraph
    assert out == build_digraph(2, [(0, 1), (1, 0)])


def test_expand_rejects_shape_mismatch():
    g = bouquet(1)
    with pytest.raises(MalformedInputError):
        expand(g, ExpansionSpec((2,), ((1,),)))
    with pytest.raises(MalformedInputError):
        expand(g, ExpansionSpec((2,), ((0, 2),)))
    with pytest.raises(MalformedInputError):
        expand(g, ExpansionSpec((2, 2), ((0, 1),)))


def test_lift_is_translation_expansion():
    base, va = prop1_voltage(2, 2)
    assert lift(base, va).digraph == expand(base, translation_spec(base, va)).digraph


def test_lift_of_bouquet_is_cayley():
    z5 = cyclic_group(5)
    out = lift(bouquet(2), VoltageAssignment(z5, (1, 2))).digraph
    assert same_arcs(out, cayley_digraph(z5, [1, 2]))


def test_identity_voltages_give_disjoint_copies():
    g = de_bruijn(2, 2)
    out = lift(g, VoltageAssignment(cyclic_group(3), (0,) * g.m))
    union = build_digraph(
        3 * g.n, [(3 * t + c, 3 * h + c) for t, h in g.arcs for c in range(3)]
    )
    assert same_arcs(out.digraph, union)
    assert is_isomorphic(out.digraph, union) is not None


def test_cayley_examples():
    z4 = cyclic_group(4)
    assert cayley_digraph(z4, [1]) == directed_cycle(4)
    g = cayley_digraph(z4, [1, 3])
    assert g.n == 4 and all(g.out_neighbors(i) == {(i + 1) % 4, (i - 1) % 4} for i in range(4))
    assert cayley_digraph(cyclic_group(1), [0]) == bouquet(1)


def test_coset_digraph_examples():
    z6 = cyclic_group(6)
    # cosets {0,3},{1,4},{2,5}; adding 1 cycles through them
    assert coset_digraph(z6, {0, 3}, [1]) == directed_cycle(3)
    assert coset_digraph(z6, {0}, [1, 2]) == cayley_digraph(z6, [1, 2])
    loops = coset_digraph(z6, {0, 3}, [3])
    assert loops == build_digraph(3, [(0, 0), (1, 1), (2, 2)])
    with pytest.raises(InvalidSubgroupError):
        coset_digraph(z6, {0, 2}, [1])


def test_expanded_coset_examples():
    z6 = cyclic_group(6)
    base, va = prop1_voltage(2, 2)
    z2 = va.group
    assert expanded_coset_digraph(base, z2, {0}, va).digraph == lift(base, va).digraph
    b = bouquet(2)
    out = expanded_coset_digraph(b, z6, {0, 3}, VoltageAssignment(z6, (1, 3))).digraph
    assert same_arcs(out, coset_digraph(z6, {0, 3}, [1, 3]))
    # tracing fibers: (0,H0)->(1,H1)->(0,H2)->(1,H0)->(0,H1)->(1,H2)->(0,H0)
    two_cycle = directed_cycle(2)
    out = expanded_coset_digraph(two_cycle, z6, {0, 3}, VoltageAssignment(z6, (1, 1))).digraph
    assert out.n == 6 and is_isomorphic(out, directed_cycle(6)) is not None
    with pytest.raises(InvalidSubgroupError):
        expanded_coset_digraph(two_cycle, cyclic_group(6), {0, 3}, VoltageAssignment(z6, (1, 1)))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_lift_laws(seed):
    rng = random.Random(seed)
    g = random_digraph(rng, rng.randint(1, 5), rng.randint(0, 10))
    G = product_group([cyclic_group(rng.randint(1, 4)) for _ in range(rng.randint(1, 2))])
    va = random_voltages(rng, g, G)
    fd = lift(g, va)
    out = fd.digraph
    assert (out.n, out.m) == (g.n * G.order, g.m * G.order)
    for x, (v, _) in enumerate(fd.fiber_of):
        assert out.out_degree(x) == g.out_degree(v)
    assert out == expand(g, translation_spec(g, va)).digraph
    r = check_regular(out, fd.fibers())
    assert r.matrix == tuple(
        tuple(g.multiplicity.get((u, v), 0) for v in range(g.n)) for u in range(g.n)
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_expand_out_degree_law(seed):
    rng = random.Random(seed)
    g = random_digraph(rng, rng.randint(1, 5), rng.randint(0, 10))
    sizes = tuple(rng.randint(1, 3) for _ in range(g.n))
    maps = tuple(tuple(rng.randrange(sizes[v]) for _ in range(sizes[u])) for u, v in g.arcs)
    fd = expand(g, ExpansionSpec(sizes, maps))
    assert fd.digraph.n == sum(sizes)
    assert fd.digraph.m == sum(sizes[u] for u, _ in g.arcs)
    for x, (v, _) in enumerate(fd.fiber_of):
        assert fd.digraph.out_degree(x) == g.out_degree(v)
