"""Regular partitions, quotient digraphs, and the induced partition of arcs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .digraph import Digraph, MalformedInputError, build_digraph
from .iso import is_isomorphic
from .lineops import line_digraph

Partition = tuple[tuple[int, ...], ...]
IntersectionMatrix = tuple[tuple[int, ...], ...]


class NonRegularPartitionError(ValueError):
    pass


def make_partition(blocks: Iterable[Iterable[int]], n: int) -> Partition:
    """Normalize and validate: non-empty, disjoint blocks covering ``0..n-1``."""
    out = tuple(tuple(sorted(set(b))) for b in blocks)
    seen: set[int] = set()
    for i, b in enumerate(out):
        if not b:
            raise MalformedInputError(f"block {i} is empty")
        for v in b:
            if not 0 <= v < n:
                raise MalformedInputError(f"block {i} names vertex {v} outside 0..{n - 1}")
            if v in seen:
                raise MalformedInputError(f"vertex {v} lies in two blocks")
            seen.add(v)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise MalformedInputError(f"vertices {missing} are in no block")
    return out


def singleton_partition(g: Digraph) -> Partition:
    return tuple((v,) for v in range(g.n))


@dataclass(frozen=True)
class Regularity:
    matrix: Optional[IntersectionMatrix]
    # (u, v, j): u and v share a block but send different arc counts into block j
    witness: Optional[tuple[int, int, int]] = None

    @property
    def regular(self) -> bool:
        return self.matrix is not None

    def __bool__(self) -> bool:
        return self.regular


def block_of(p: Partition, n: int) -> list[int]:
    where = [0] * n
    for i, b in enumerate(p):
        for v in b:
            where[v] = i
    return where


def check_regular(g: Digraph, p: Sequence[Sequence[int]]) -> Regularity:
    """Intersection numbers ``c_ij``, counted with arc multiplicity."""
    p = make_partition(p, g.n)
    where = block_of(p, g.n)
    rows = []
    for v in range(g.n):
        row = [0] * len(p)
        for e in g.out_arcs[v]:
            row[where[g.arcs[e][1]]] += 1
        rows.append(row)
    matrix = []
    for b in p:
        ref = rows[b[0]]
        for v in b[1:]:
            if rows[v] != ref:
                j = next(j for j in range(len(p)) if rows[v][j] != ref[j])
                return Regularity(None, (b[0], v, j))
        matrix.append(tuple(ref))
    return Regularity(tuple(matrix))


def _require_regular(g: Digraph, p: Sequence[Sequence[int]]) -> IntersectionMatrix:
    r = check_regular(g, p)
    if r.matrix is None:
        u, v, j = r.witness  # type: ignore[misc]
        raise NonRegularPartitionError(
            f"partition is not regular: vertices {u} and {v} send different arc counts into block {j}"
        )
    return r.matrix


def quotient(g: Digraph, p: Sequence[Sequence[int]]) -> Digraph:
    """One vertex per block and ``c_ij`` parallel arcs from block i to block j."""
    c = _require_regular(g, p)
    p = make_partition(p, g.n)
    arcs = [(i, j) for i, row in enumerate(c) for j, k in enumerate(row) for _ in range(k)]
    labels = ["{" + ",".join(g.labels[v] for v in b) + "}" for b in p]
    return build_digraph(len(p), arcs, labels)


def induced_arc_partition(g: Digraph, p: Sequence[Sequence[int]]) -> Partition:
    """Blocks ``U_ij`` of arcs from ``U_i`` to ``U_j``; empty blocks are dropped.

    The result partitions the vertices of ``line_digraph(g)``, whose vertex
    ``e`` is arc ``e`` of ``g``.
    """
    _require_regular(g, p)
    p = make_partition(p, g.n)
    where = block_of(p, g.n)
    blocks: dict[tuple[int, int], list[int]] = {}
    for e, (t, h) in enumerate(g.arcs):
        blocks.setdefault((where[t], where[h]), []).append(e)
    return tuple(tuple(blocks[k]) for k in sorted(blocks))


def verify_commutation(g: Digraph, p: Sequence[Sequence[int]]) -> bool:
    """Whether ``L(quotient(g, p))`` is isomorphic to ``quotient(L(g), p')``."""
    left = line_digraph(quotient(g, p))
    lg = line_digraph(g)
    induced = induced_arc_partition(g, p)
    if not check_regular(lg, induced):
        return False
    return is_isomorphic(left, quotient(lg, induced)) is not None
