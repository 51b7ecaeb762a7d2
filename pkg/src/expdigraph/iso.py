"""Exact multiplicity-aware digraph isomorphism by pruned backtracking.

Candidates are first separated by local invariants (degrees, loop count,
sorted distance profiles) refined by iterated neighbour colouring. The
search then extends a partial map along arcs, so each new vertex is only
tried against images adjacent to already-mapped ones.
"""

from __future__ import annotations

import sys
from collections import Counter
from typing import Optional

from .digraph import Digraph, all_pairs_distances


class IsoBudgetExceeded(RuntimeError):
    """The search visited more nodes than allowed without a verdict."""


def _base_invariants(g: Digraph) -> list[tuple]:
    dist = all_pairs_distances(g)
    cols = list(zip(*dist)) if g.n else []
    key = lambda d: -1 if d is None else d  # noqa: E731
    return [
        (
            g.in_degree(v),
            g.out_degree(v),
            g.loops(v),
            tuple(sorted(map(key, dist[v]))),
            tuple(sorted(map(key, cols[v]))),
        )
        for v in range(g.n)
    ]


def _refine(graphs: list[Digraph]) -> list[list[int]]:
    """Joint colour refinement so colours are comparable across graphs."""
    inv = [_base_invariants(g) for g in graphs]
    palette = {k: i for i, k in enumerate(sorted({x for row in inv for x in row}))}
    colors = [[palette[x] for x in row] for row in inv]
    outm = [_out_mult(g) for g in graphs]
    inm = [_in_mult(g) for g in graphs]
    while True:
        sigs = []
        for g, col, om, im in zip(graphs, colors, outm, inm):
            rows = []
            for v in range(g.n):
                outs = Counter((col[w], k) for (_, w), k in om[v].items())
                ins = Counter((col[w], k) for (w, _), k in im[v].items())
                rows.append((col[v], tuple(sorted(outs.items())), tuple(sorted(ins.items()))))
            sigs.append(rows)
        palette = {k: i for i, k in enumerate(sorted({x for row in sigs for x in row}))}
        new = [[palette[x] for x in row] for row in sigs]
        if len(palette) == len({c for row in colors for c in row}):
            return new
        colors = new


def _out_mult(g: Digraph) -> list[dict[tuple[int, int], int]]:
    rows: list[dict[tuple[int, int], int]] = [{} for _ in range(g.n)]
    for (t, h), k in g.multiplicity.items():
        rows[t][(t, h)] = k
    return rows


def _in_mult(g: Digraph) -> list[dict[tuple[int, int], int]]:
    rows: list[dict[tuple[int, int], int]] = [{} for _ in range(g.n)]
    for (t, h), k in g.multiplicity.items():
        rows[h][(t, h)] = k
    return rows


def verify_witness(g1: Digraph, g2: Digraph, sigma: list[int]) -> bool:
    if g1.n != g2.n or sorted(sigma) != list(range(g2.n)):
        return False
    image = Counter((sigma[t], sigma[h]) for t, h in g1.arcs)
    return image == g2.multiplicity


def is_isomorphic(g1: Digraph, g2: Digraph, node_budget: Optional[int] = None) -> Optional[list[int]]:
    """Return ``sigma`` with ``mult(u,v) == mult(sigma[u], sigma[v])``, or ``None``.

    Raises :class:`IsoBudgetExceeded` once more than ``node_budget`` partial
    assignments have been tried.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    n = g1.n
    if n == 0:
        return []
    if sorted(g1.multiplicity.values()) != sorted(g2.multiplicity.values()):
        return None
    c1, c2 = _refine([g1, g2])
    if Counter(c1) != Counter(c2):
        return None

    m1, m2 = g1.multiplicity, g2.multiplicity
    nb1 = [g1.out_neighbors(v) | g1.in_neighbors(v) for v in range(n)]
    out2 = [g2.out_neighbors(v) for v in range(n)]
    in2 = [g2.in_neighbors(v) for v in range(n)]
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(c2[v], []).append(v)

    # search order: rarest colour first, then grow along arcs (undirected BFS)
    order: list[int] = []
    placed = [False] * n
    rarity = Counter(c1)
    for start in sorted(range(n), key=lambda v: (rarity[c1[v]], v)):
        if placed[start]:
            continue
        placed[start] = True
        order.append(start)
        i = len(order) - 1
        while i < len(order):
            u = order[i]
            for w in sorted(nb1[u], key=lambda v: (rarity[c1[v]], v)):
                if not placed[w]:
                    placed[w] = True
                    order.append(w)
            i += 1
    # an earlier-placed neighbour to anchor candidate generation
    anchor: list[Optional[int]] = []
    pos = {v: i for i, v in enumerate(order)}
    for i, u in enumerate(order):
        earlier = [w for w in nb1[u] if pos[w] < i]
        anchor.append(min(earlier, key=pos.__getitem__) if earlier else None)
    back = [[w for w in nb1[u] if pos[w] < i] for i, u in enumerate(order)]

    sigma = [-1] * n
    used = [False] * n
    visited = 0

    def consistent(u: int, x: int, i: int) -> bool:
        if m1.get((u, u), 0) != m2.get((x, x), 0):
            return False
        for w in back[i]:
            y = sigma[w]
            if m1.get((u, w), 0) != m2.get((x, y), 0) or m1.get((w, u), 0) != m2.get((y, x), 0):
                return False
        # x may not touch mapped vertices beyond the images of u's mapped neighbours
        return len(back[i]) == sum(1 for y in (out2[x] | in2[x]) if y != x and used[y])

    def search(i: int) -> bool:
        nonlocal visited
        if i == n:
            return True
        u = order[i]
        a = anchor[i]
        if a is None:
            pool = by_color[c1[u]]
        else:
            y = sigma[a]
            pool = sorted(out2[y] | in2[y])
        for x in pool:
            if used[x] or c2[x] != c1[u]:
                continue
            visited += 1
            if node_budget is not None and visited > node_budget:
                raise IsoBudgetExceeded(f"more than {node_budget} nodes explored")
            if not consistent(u, x, i):
                continue
            sigma[u] = x
            used[x] = True
            if search(i + 1):
                return True
            sigma[u] = -1
            used[x] = False
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        found = search(0)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return None
    if not verify_witness(g1, g2, sigma):
        raise AssertionError("isomorphism search produced an invalid witness")
    return sigma
