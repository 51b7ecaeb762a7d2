"""Random instances for the property suites and sweep scripts.

Every generator takes an explicit ``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from typing import Optional

from .constructions import VoltageAssignment
from .digraph import Digraph, build_digraph, is_strongly_connected
from .groups import FiniteGroup
from .lineops import heuchenne_is_line, make_arc_subset


def random_digraph(
    rng: random.Random, n: int, m: int, simple: bool = False, loops: bool = True
) -> Digraph:
    pairs = [(t, h) for t in range(n) for h in range(n) if loops or t != h]
    if simple:
        arcs = rng.sample(pairs, min(m, len(pairs)))
    else:
        arcs = [rng.choice(pairs) for _ in range(m)]
    return build_digraph(n, arcs)


def random_voltages(rng: random.Random, g: Digraph, G: FiniteGroup) -> VoltageAssignment:
    return VoltageAssignment(G, tuple(rng.randrange(G.order) for _ in range(g.m)))


def random_strong_noncycle(rng: random.Random, max_n: int = 6, tries: int = 1000) -> Digraph:
    """A strongly connected digraph that is not a directed cycle and has ``m > n``."""
    for _ in range(tries):
        n = rng.randint(2, max_n)
        m = rng.randint(n + 1, 3 * n)
        g = random_digraph(rng, n, m)
        if is_strongly_connected(g) and g.m > g.n and not _is_cycle(g):
            return g
    raise RuntimeError("could not draw a strongly connected non-cycle digraph")


def _is_cycle(g: Digraph) -> bool:
    if g.m != g.n:
        return False
    return all(g.out_degree(v) == 1 and g.in_degree(v) == 1 for v in range(g.n)) and is_strongly_connected(g)


def random_arc_subset(
    rng: random.Random, g: Digraph, mu: Optional[int] = None
) -> tuple[int, ...]:
    """One in-arc per vertex, then extra arcs until ``mu`` are kept."""
    keep = {rng.choice(g.in_arcs[v]) for v in range(g.n)}
    if mu is None:
        mu = rng.randint(g.n, g.m)
    rest = [e for e in range(g.m) if e not in keep]
    rng.shuffle(rest)
    keep.update(rest[: max(0, mu - len(keep))])
    return make_arc_subset(g, keep)


def random_choice(rng: random.Random, g: Digraph, es: tuple[int, ...]) -> dict[int, int]:
    kept = set(es)
    by_head: dict[int, list[int]] = {}
    for e in es:
        by_head.setdefault(g.arcs[e][1], []).append(e)
    return {f: rng.choice(by_head[g.arcs[f][1]]) for f in range(g.m) if f not in kept}


def random_covered_digraph(rng: random.Random, max_n: int = 6) -> Digraph:
    """Random digraph where every vertex has positive in-degree."""
    n = rng.randint(1, max_n)
    g = random_digraph(rng, n, rng.randint(0, 2 * n))
    extra = [(rng.randrange(n), v) for v in range(n) if g.in_degree(v) == 0]
    return build_digraph(n, list(g.arcs) + extra)


def condition_voltages(rng: random.Random, g: Digraph, G: FiniteGroup) -> VoltageAssignment:
    """Voltages on a line digraph meeting the lift-preservation condition.

    Vertices sharing an out-neighbourhood form a class; the first member gets
    free voltages and every other member ``v`` gets ``alpha(v x) = c_v alpha(r x)``
    for a fixed random ``c_v``.
    """
    assert heuchenne_is_line(g)
    arc = {a: e for e, a in enumerate(g.arcs)}
    volts = [0] * g.m
    classes: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        if g.out_degree(v):
            classes.setdefault(g.out_neighbors(v), []).append(v)
    for out, members in classes.items():
        r = members[0]
        for x in out:
            volts[arc[r, x]] = rng.randrange(G.order)
        for v in members[1:]:
            c = rng.randrange(G.order)
            for x in out:
                volts[arc[v, x]] = G.mul(c, volts[arc[r, x]])
    return VoltageAssignment(G, tuple(volts))

