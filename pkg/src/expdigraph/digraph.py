"""Finite multidigraphs with loops and parallel arcs, plus hop-distance metrics."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence


class MalformedInputError(ValueError):
    """Raised when a construction receives structurally invalid input."""


@dataclass(frozen=True, eq=True)
class Digraph:
    """A multidigraph on vertices ``0..n-1``.

    Arcs keep the index they were given at construction time. Equality is
    structural: same order and the same arc list in the same order. Labels
    and the name are presentation only.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise MalformedInputError(f"negative vertex count {self.n}")
        for i, (t, h) in enumerate(self.arcs):
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise MalformedInputError(
                    f"arc {i} = ({t}, {h}) has an endpoint outside 0..{self.n - 1}"
                )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(v) for v in range(self.n)))
        elif len(self.labels) != self.n:
            raise MalformedInputError(
                f"{len(self.labels)} labels given for {self.n} vertices"
            )

    @property
    def m(self) -> int:
        return len(self.arcs)

    def tail(self, e: int) -> int:
        return self.arcs[e][0]

    def head(self, e: int) -> int:
        return self.arcs[e][1]

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        """Out-arc indices per vertex, ascending."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for e, (t, _) in enumerate(self.arcs):
            out[t].append(e)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (_, h) in enumerate(self.arcs):
            inc[h].append(e)
        return tuple(tuple(x) for x in inc)

    def out_degree(self, v: int) -> int:
        return len(self.out_arcs[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_arcs[v])

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.arcs[e][1] for e in self.out_arcs[v])

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.arcs[e][0] for e in self.in_arcs[v])

    @cached_property
    def multiplicity(self) -> Counter:
        """``(tail, head) -> number of parallel arcs``."""
        return Counter(self.arcs)

    def is_simple(self) -> bool:
        """True when no (tail, head) pair repeats. Loops are allowed."""
        return len(self.multiplicity) == self.m

    def loops(self, v: int) -> int:
        return self.multiplicity.get((v, v), 0)

    def relabeled(self, labels: Sequence[str] | None = None, name: str | None = None) -> "Digraph":
        return Digraph(
            self.n,
            self.arcs,
            tuple(labels) if labels is not None else self.labels,
            self.name if name is None else name,
        )

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Digraph{tag} n={self.n} m={self.m}>"


def build_digraph(
    n: int,
    arcs: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
    name: str = "",
) -> Digraph:
    return Digraph(
        n,
        tuple((int(t), int(h)) for t, h in arcs),
        tuple(labels) if labels is not None else (),
        name,
    )


def directed_cycle(n: int) -> Digraph:
    return build_digraph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


# distances

UNREACHABLE = None

DistanceMatrix = list[list[Optional[int]]]


def bfs_distances(g: Digraph, source: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for e in g.out_arcs[u]:
            w = g.arcs[e][1]
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Digraph) -> DistanceMatrix:
    """Hop distances; ``None`` marks an unreachable pair."""
    return [bfs_distances(g, s) for s in range(g.n)]


def is_strongly_connected(g: Digraph) -> bool:
    if g.n == 0:
        return True
    return all(d is not None for d in bfs_distances(g, 0)) and all(
        d is not None for d in bfs_distances(reverse(g), 0)
    )


def reverse(g: Digraph) -> Digraph:
    return Digraph(g.n, tuple((h, t) for t, h in g.arcs), g.labels, g.name)


@dataclass(frozen=True)
class Metrics:
    order: int
    size: int
    min_in: int
    max_in: int
    min_out: int
    max_out: int
    diameter: Optional[int]
    mean_distance: Optional[Fraction]

    def as_lines(self) -> list[str]:
        def fmt(x: object) -> str:
            return "none" if x is None else str(x)

        return [
            f"n={self.order}",
            f"m={self.size}",
            f"indeg={self.min_in}..{self.max_in}",
            f"outdeg={self.min_out}..{self.max_out}",
            f"D={fmt(self.diameter)}",
            f"mean={fmt(self.mean_distance)}",
        ]


def metrics(g: Digraph, dist: DistanceMatrix | None = None) -> Metrics:
    """Degree ranges, diameter and mean distance.

    Mean distance averages over ordered pairs ``u != v`` and is exact. Both
    distance fields are ``None`` unless ``g`` is strongly connected.
    """
    ins = [g.in_degree(v) for v in range(g.n)] or [0]
    outs = [g.out_degree(v) for v in range(g.n)] or [0]
    if dist is None:
        dist = all_pairs_distances(g)
    diameter: Optional[int] = None
    mean: Optional[Fraction] = None
    if g.n > 0 and all(d is not None for row in dist for d in row):
        diameter = max(max(row) for row in dist)  # type: ignore[type-var]
        pairs = g.n * (g.n - 1)
        total = sum(sum(row) for row in dist)  # type: ignore[arg-type]
        mean = Fraction(total, pairs) if pairs else Fraction(0)
    return Metrics(g.n, g.m, min(ins), max(ins), min(outs), max(outs), diameter, mean)
