"""Expanded digraphs and their group-based special cases.

An expansion replaces each base vertex ``v`` by a fiber of ``s_v`` new
vertices and each base arc ``e = (u, v)`` by the arcs ``x -> phi_e(x)`` for
every ``x`` in the fiber of ``u``. Lifts, Cayley digraphs and coset digraphs
are all expansions whose maps are right translations in a group.

New vertices are numbered lexicographically by (base vertex, fiber element);
new arcs are emitted base arc by base arc, then by fiber element.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .digraph import Digraph, MalformedInputError, build_digraph
from .groups import FiniteGroup, InvalidSubgroupError, right_cosets


@dataclass(frozen=True)
class ExpansionSpec:
    fiber_sizes: tuple[int, ...]
    maps: tuple[tuple[int, ...], ...]

    def validate(self, base: Digraph) -> None:
        if len(self.fiber_sizes) != base.n:
            raise MalformedInputError(
                f"{len(self.fiber_sizes)} fibers given for {base.n} base vertices"
            )
        if len(self.maps) != base.m:
            raise MalformedInputError(f"{len(self.maps)} maps given for {base.m} base arcs")
        for v, s in enumerate(self.fiber_sizes):
            if s < 1:
                raise MalformedInputError(f"fiber of vertex {v} is empty")
        for e, (u, v) in enumerate(base.arcs):
            phi = self.maps[e]
            if len(phi) != self.fiber_sizes[u]:
                raise MalformedInputError(
                    f"map of arc {e} is defined on {len(phi)} points, fiber of {u} has {self.fiber_sizes[u]}"
                )
            for x, y in enumerate(phi):
                if not 0 <= y < self.fiber_sizes[v]:
                    raise MalformedInputError(
                        f"map of arc {e} sends {x} to {y}, outside the fiber of {v}"
                    )


@dataclass(frozen=True)
class VoltageAssignment:
    group: FiniteGroup
    voltages: tuple[int, ...]

    def __getitem__(self, e: int) -> int:
        return self.voltages[e]

    def validate(self, base: Digraph) -> None:
        if len(self.voltages) != base.m:
            raise MalformedInputError(
                f"{len(self.voltages)} voltages given for {base.m} arcs"
            )
        for e, a in enumerate(self.voltages):
            if not 0 <= a < self.group.order:
                raise MalformedInputError(f"voltage {a} of arc {e} is not a group element")


@dataclass(frozen=True)
class FiberedDigraph:
    """A digraph together with its projection onto a base digraph."""

    digraph: Digraph
    fiber_of: tuple[tuple[int, int], ...]

    def fibers(self) -> list[tuple[int, ...]]:
        """Vertex blocks, one per base vertex, in base order."""
        out: dict[int, list[int]] = {}
        for x, (v, _) in enumerate(self.fiber_of):
            out.setdefault(v, []).append(x)
        return [tuple(out[v]) for v in sorted(out)]


def expand(base: Digraph, spec: ExpansionSpec, labels: Sequence[str] | None = None) -> FiberedDigraph:
    spec.validate(base)
    offset = [0, *accumulate(spec.fiber_sizes)]
    arcs = []
    for e, (u, v) in enumerate(base.arcs):
        phi = spec.maps[e]
        for x in range(spec.fiber_sizes[u]):
            arcs.append((offset[u] + x, offset[v] + phi[x]))
    fiber_of = tuple((v, x) for v in range(base.n) for x in range(spec.fiber_sizes[v]))
    if labels is None:
        labels = [f"{base.labels[v]}.{x}" for v, x in fiber_of]
    return FiberedDigraph(build_digraph(offset[-1], arcs, labels), fiber_of)


def lift(base: Digraph, va: VoltageAssignment) -> FiberedDigraph:
    """The lift: vertices ``(v, g)``, arcs ``(u, g) -> (v, g * alpha(e))``."""
    va.validate(base)
    G = va.group
    q = G.order
    arcs = [
        (u * q + g, v * q + G.mul(g, va[e]))
        for e, (u, v) in enumerate(base.arcs)
        for g in G.elements()
    ]
    fiber_of = tuple((v, g) for v in range(base.n) for g in G.elements())
    labels = [f"({base.labels[v]};{G.render(g)})" for v, g in fiber_of]
    return FiberedDigraph(build_digraph(base.n * q, arcs, labels), fiber_of)


def translation_spec(base: Digraph, va: VoltageAssignment) -> ExpansionSpec:
    """The expansion spec whose maps are right translations by the voltages."""
    G = va.group
    return ExpansionSpec(
        (G.order,) * base.n,
        tuple(tuple(G.mul(g, va[e]) for g in G.elements()) for e in range(base.m)),
    )


def bouquet(k: int) -> Digraph:
    """One vertex carrying ``k`` loops."""
    return build_digraph(1, [(0, 0)] * k)


def cayley_digraph(G: FiniteGroup, gens: Sequence[int]) -> Digraph:
    if not gens:
        raise MalformedInputError("Cayley digraph needs at least one generator")
    arcs = [(h, G.mul(h, d)) for h in G.elements() for d in gens]
    labels = [G.render(h) for h in G.elements()]
    name = "Cay(Z" + "xZ".join(map(str, G.moduli)) + ",{" + ";".join(G.render(d) for d in gens) + "})"
    return build_digraph(G.order, arcs, labels, name=name)


def _coset_index(G: FiniteGroup, cosets: list[tuple[int, ...]]) -> list[int]:
    where = [0] * G.order
    for i, block in enumerate(cosets):
        for x in block:
            where[x] = i
    return where


def coset_digraph(G: FiniteGroup, H: Sequence[int], gens: Sequence[int]) -> Digraph:
    """One vertex per right coset ``Hx``, arcs ``Hx -> Hxd`` per generator ``d``."""
    if not gens:
        raise MalformedInputError("coset digraph needs at least one generator")
    cosets = right_cosets(G, H)
    where = _coset_index(G, cosets)
    arcs = [(i, where[G.mul(block[0], d)]) for i, block in enumerate(cosets) for d in gens]
    labels = ["H" + G.render(block[0]) for block in cosets]
    return build_digraph(len(cosets), arcs, labels)


def expanded_coset_digraph(
    base: Digraph, G: FiniteGroup, H: Sequence[int], va: VoltageAssignment
) -> FiberedDigraph:
    """Expansion with right cosets of ``H`` as fibers and maps ``Hx -> Hx*alpha(e)``."""
    if va.group is not G:
        raise InvalidSubgroupError("voltage group differs from the group of the subgroup")
    va.validate(base)
    cosets = right_cosets(G, H)
    where = _coset_index(G, cosets)
    maps = tuple(
        tuple(where[G.mul(block[0], va[e])] for block in cosets) for e in range(base.m)
    )
    spec = ExpansionSpec((len(cosets),) * base.n, maps)
    labels = [
        f"({base.labels[v]};H{G.render(block[0])})" for v in range(base.n) for block in cosets
    ]
    return expand(base, spec, labels)
