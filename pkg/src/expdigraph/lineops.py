"""Line digraphs, partial line digraphs and vertex-splitting.

Also holds the Heuchenne line-digraph test, a brute-force root search used as
its independent oracle, and the voltage condition under which a lift of a
line digraph stays a line digraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, permutations
from typing import Iterable, Iterator, Mapping, Optional

from .constructions import ExpansionSpec, VoltageAssignment
from .digraph import Digraph, MalformedInputError, build_digraph


class CoverageError(MalformedInputError):
    """An arc subset misses every in-arc of some vertex."""


class ChoiceError(MalformedInputError):
    """A representative choice is missing or does not preserve the head."""


class SplitSpecError(MalformedInputError):
    pass


class NotALineDigraphError(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


def _arc_labels(g: Digraph) -> list[str]:
    sep = "" if all(len(s) == 1 for s in g.labels) else "-"
    return [f"{g.labels[t]}{sep}{g.labels[h]}" for t, h in g.arcs]


def line_digraph(g: Digraph) -> Digraph:
    """Vertices are the arcs of ``g``; ``e -> f`` whenever ``head(e) == tail(f)``."""
    arcs = [(e, f) for e, (_, h) in enumerate(g.arcs) for f in g.out_arcs[h]]
    name = f"L({g.name})" if g.name else ""
    return build_digraph(g.m, arcs, _arc_labels(g), name=name)


def heuchenne_is_line(g: Digraph) -> bool:
    """Out-neighbourhoods of any two vertices are equal or disjoint.

    Digraphs with parallel arcs are never line digraphs.
    """
    if not g.is_simple():
        return False
    owner: dict[int, frozenset[int]] = {}
    for v in range(g.n):
        out = g.out_neighbors(v)
        for x in out:
            prev = owner.setdefault(x, out)
            if prev != out:
                return False
    return True


# brute-force root search


def canonical_form(g: Digraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least sorted arc list over all vertex relabellings."""
    best = None
    for p in permutations(range(g.n)):
        key = tuple(sorted((p[t], p[h]) for t, h in g.arcs))
        if best is None or key < best:
            best = key
    return g.n, best or ()


def _root_candidates(m: int, bound: int) -> Iterator[list[tuple[int, int]]]:
    """Arc lists of length ``m`` whose endpoint sequence is a restricted growth
    string below ``bound``; every multidigraph without isolated vertices on at
    most ``bound`` vertices appears up to relabelling."""
    seq: list[int] = []

    def rec(top: int) -> Iterator[list[tuple[int, int]]]:
        if len(seq) == 2 * m:
            yield [(seq[i], seq[i + 1]) for i in range(0, 2 * m, 2)]
            return
        for x in range(min(top + 1, bound)):
            seq.append(x)
            yield from rec(max(top, x + 1))
            seq.pop()

    yield from rec(0)


def line_root_search(
    g: Digraph, max_root_order: int = 6, budget: Optional[int] = None
) -> Optional[Digraph]:
    """Search exhaustively for ``H`` with ``L(H)`` isomorphic to ``g``.

    Candidate roots have exactly ``g.n`` arcs and at most ``max_root_order``
    vertices. Isomorphism is decided by comparing canonical forms, so this is
    independent of both :func:`heuchenne_is_line` and the ``iso`` module.
    Meant for very small ``g``.
    """
    if not g.is_simple():
        return None
    target = canonical_form(g)
    for count, arcs in enumerate(_root_candidates(g.n, max_root_order), 1):
        if budget is not None and count > budget:
            raise SearchBudgetExceeded(f"more than {budget} candidate roots examined")
        order = 1 + max((x for a in arcs for x in a), default=-1)
        h = build_digraph(order, arcs)
        if canonical_form(line_digraph(h)) == target:
            return h
    return None


# partial line digraphs


def make_arc_subset(g: Digraph, arcs: Iterable[int]) -> tuple[int, ...]:
    """Validate ``E'``: in range, and every vertex is the head of some kept arc."""
    es = tuple(sorted(set(arcs)))
    for e in es:
        if not 0 <= e < g.m:
            raise MalformedInputError(f"arc index {e} outside 0..{g.m - 1}")
    covered = {g.arcs[e][1] for e in es}
    if len(covered) != g.n:
        missing = sorted(set(range(g.n)) - covered)
        raise CoverageError(f"no kept arc enters vertices {missing}")
    return es


def default_choice(g: Digraph, es: Iterable[int]) -> dict[int, int]:
    """Map each dropped arc to the lowest-indexed kept arc with the same head."""
    es = make_arc_subset(g, es)
    first: dict[int, int] = {}
    for e in es:
        first.setdefault(g.arcs[e][1], e)
    kept = set(es)
    return {f: first[g.arcs[f][1]] for f in range(g.m) if f not in kept}


def _representatives(g: Digraph, es: tuple[int, ...], cf: Mapping[int, int] | None) -> list[int]:
    kept = set(es)
    if cf is None:
        cf = default_choice(g, es)
    rep = []
    for f in range(g.m):
        if f in kept:
            rep.append(f)
            continue
        if f not in cf:
            raise ChoiceError(f"no representative chosen for dropped arc {f}")
        r = cf[f]
        if r not in kept:
            raise ChoiceError(f"representative {r} of arc {f} is not a kept arc")
        if g.arcs[r][1] != g.arcs[f][1]:
            raise ChoiceError(f"representative {r} of arc {f} has a different head")
        rep.append(r)
    return rep


def partial_line_digraph(
    g: Digraph, es: Iterable[int], cf: Mapping[int, int] | None = None
) -> Digraph:
    """``L_mu(g)`` on the kept arcs ``es``.

    From a kept arc ``e = (u, v)`` there is one arc to ``rep(f)`` for every
    base arc ``f`` leaving ``v``. Vertices follow ascending kept-arc index.
    """
    es = make_arc_subset(g, es)
    rep = _representatives(g, es, cf)
    pos = {e: i for i, e in enumerate(es)}
    arcs = [(i, pos[rep[f]]) for i, e in enumerate(es) for f in g.out_arcs[g.arcs[e][1]]]
    labels = _arc_labels(g)
    return build_digraph(len(es), arcs, [labels[e] for e in es])


# vertex splitting


@dataclass(frozen=True)
class SplitSpec:
    """Copy counts per vertex and, per arc, which copy of its head it enters.

    Copy indices are 0-based: copies of ``w`` are ``0..iota[w]-1``.
    """

    iota: tuple[int, ...]
    assign: tuple[int, ...]

    @property
    def mu(self) -> int:
        return sum(self.iota)

    def validate(self, g: Digraph) -> None:
        if len(self.iota) != g.n:
            raise SplitSpecError(f"{len(self.iota)} copy counts for {g.n} vertices")
        if len(self.assign) != g.m:
            raise SplitSpecError(f"{len(self.assign)} copy assignments for {g.m} arcs")
        for v, k in enumerate(self.iota):
            if not 1 <= k <= g.in_degree(v):
                raise SplitSpecError(
                    f"vertex {v} split into {k} copies; must be within 1..{g.in_degree(v)}"
                )
        hit = [set() for _ in range(g.n)]
        for f, (_, w) in enumerate(g.arcs):
            j = self.assign[f]
            if not 0 <= j < self.iota[w]:
                raise SplitSpecError(f"arc {f} enters copy {j} of vertex {w}, which has {self.iota[w]}")
            hit[w].add(j)
        for w in range(g.n):
            if len(hit[w]) != self.iota[w]:
                idle = sorted(set(range(self.iota[w])) - hit[w])
                raise SplitSpecError(f"copies {idle} of vertex {w} would have in-degree zero")


def vertex_split(g: Digraph, spec: SplitSpec) -> Digraph:
    """``S_mu(g)``: for each arc ``(v, w)`` with chosen copy ``w_j``, arcs ``v_i -> w_j`` for all ``i``."""
    spec.validate(g)
    offset = [0, *accumulate(spec.iota)]
    arcs = [
        (offset[v] + i, offset[w] + spec.assign[f])
        for f, (v, w) in enumerate(g.arcs)
        for i in range(spec.iota[v])
    ]
    labels = [f"{g.labels[v]}.{i}" for v in range(g.n) for i in range(spec.iota[v])]
    return build_digraph(offset[-1], arcs, labels)


def identity_split(g: Digraph) -> SplitSpec:
    return SplitSpec((1,) * g.n, (0,) * g.m)


def _copies(g: Digraph, es: tuple[int, ...]) -> dict[int, int]:
    """Kept arc -> its copy index among the kept arcs with the same head."""
    count = [0] * g.n
    out = {}
    for e in es:
        h = g.arcs[e][1]
        out[e] = count[h]
        count[h] += 1
    return out


def matched_split_spec(
    g: Digraph, es: Iterable[int], cf: Mapping[int, int] | None = None
) -> SplitSpec:
    """The split whose copies of ``v`` are the kept arcs entering ``v``.

    With this spec, ``vertex_split`` and ``partial_line_digraph`` agree up to
    the relabelling kept arc ``e`` <-> its copy.
    """
    es = make_arc_subset(g, es)
    rep = _representatives(g, es, cf)
    copy = _copies(g, es)
    iota = [0] * g.n
    for e in es:
        iota[g.arcs[e][1]] += 1
    return SplitSpec(tuple(iota), tuple(copy[rep[f]] for f in range(g.m)))


def plift_expansion_spec(
    g: Digraph, es: Iterable[int], cf: Mapping[int, int] | None = None
) -> ExpansionSpec:
    """Partial line digraph as an expansion: the fiber of ``v`` is the kept
    arcs entering ``v`` and arc ``f`` maps its whole fiber onto ``rep(f)``."""
    es = make_arc_subset(g, es)
    rep = _representatives(g, es, cf)
    copy = _copies(g, es)
    sizes = [0] * g.n
    for e in es:
        sizes[g.arcs[e][1]] += 1
    maps = tuple((copy[rep[f]],) * sizes[v] for f, (v, _) in enumerate(g.arcs))
    return ExpansionSpec(tuple(sizes), maps)


# lifts of line digraphs


@dataclass(frozen=True)
class LineCondReport:
    holds: bool
    # (u, v, x_i, x_j) with differing offsets alpha(u x)alpha(v x)^-1 at x_i and x_j
    witness: Optional[tuple[int, int, int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


def prop4_condition(g: Digraph, va: VoltageAssignment) -> LineCondReport:
    """Check that ``alpha(u x) alpha(v x)^-1`` does not depend on ``x`` whenever
    ``u`` and ``v`` share their out-neighbourhood. This suffices for the lift
    of the line digraph ``g`` to be a line digraph again."""
    if not heuchenne_is_line(g):
        raise NotALineDigraphError("base digraph is not a line digraph")
    va.validate(g)
    G = va.group
    arc = {a: e for e, a in enumerate(g.arcs)}
    classes: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        out = g.out_neighbors(v)
        if out:
            classes.setdefault(out, []).append(v)
    for out, members in classes.items():
        xs = sorted(out)
        u = members[0]
        for v in members[1:]:
            offsets = [G.mul(va[arc[u, x]], G.inv(va[arc[v, x]])) for x in xs]
            for x, o in zip(xs[1:], offsets[1:]):
                if o != offsets[0]:
                    return LineCondReport(False, (u, v, xs[0], x))
    return LineCondReport(True)
