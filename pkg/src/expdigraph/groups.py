"""Small finite groups with elements stored as dense indices.

Only cyclic groups and finite direct products of cyclic groups are shipped.
Every group precomputes its full multiplication table, which is fine for the
orders used here (a few hundred at most).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .digraph import MalformedInputError


class InvalidSubgroupError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``moduli`` records the cyclic factors so elements can be written and read
    as integers (one factor) or comma-separated tuples (several factors).
    Element ``i`` corresponds to the mixed-radix tuple ``components(i)``.
    """

    moduli: tuple[int, ...]
    table: tuple[tuple[int, ...], ...] = field(repr=False)
    inverses: tuple[int, ...] = field(repr=False)
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return self.order

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def components(self, a: int) -> tuple[int, ...]:
        out = []
        for q in reversed(self.moduli):
            a, r = divmod(a, q)
            out.append(r)
        return tuple(reversed(out))

    def from_components(self, comps: Sequence[int]) -> int:
        if len(comps) != len(self.moduli):
            raise MalformedInputError(
                f"element {tuple(comps)} has {len(comps)} components, group has {len(self.moduli)}"
            )
        idx = 0
        for c, q in zip(comps, self.moduli):
            if not 0 <= c < q:
                raise MalformedInputError(f"component {c} out of range for Z_{q}")
            idx = idx * q + c
        return idx

    def render(self, a: int) -> str:
        return ",".join(str(c) for c in self.components(a))

    def parse(self, text: str) -> int:
        try:
            comps = [int(x) for x in text.split(",")]
        except ValueError:
            raise MalformedInputError(f"bad group element {text!r}") from None
        return self.from_components(comps)

    def describe(self) -> str:
        if len(self.moduli) == 1:
            return f"cyclic {self.moduli[0]}"
        return "product " + " ".join(f"cyclic {q}" for q in self.moduli)

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.describe()}>"


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise MalformedInputError(f"cyclic group order must be positive, got {n}")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup((n,), table, tuple((-a) % n for a in range(n)))


def product_group(factors: Sequence[FiniteGroup]) -> FiniteGroup:
    """Direct product with componentwise composition."""
    if not factors:
        raise MalformedInputError("product of zero groups")
    moduli = tuple(q for f in factors for q in f.moduli)
    # mixed radix over the factor orders coincides with mixed radix over ``moduli``
    elems = list(product(*(range(f.order) for f in factors)))
    index = {t: i for i, t in enumerate(elems)}
    table = tuple(
        tuple(index[tuple(f.mul(x, y) for f, x, y in zip(factors, a, b))] for b in elems)
        for a in elems
    )
    inverses = tuple(index[tuple(f.inv(x) for f, x in zip(factors, a))] for a in elems)
    identity = index[tuple(f.identity for f in factors)]
    return FiniteGroup(moduli, table, inverses, identity)


def check_group_axioms(g: FiniteGroup) -> None:
    """Exhaustively check associativity, identity and inverses."""
    els = g.elements()
    for a in els:
        if g.mul(g.identity, a) != a or g.mul(a, g.identity) != a:
            raise AssertionError(f"identity law fails at {a}")
        if g.mul(a, g.inv(a)) != g.identity or g.mul(g.inv(a), a) != g.identity:
            raise AssertionError(f"inverse law fails at {a}")
        for b in els:
            ab = g.mul(a, b)
            for c in els:
                if g.mul(ab, c) != g.mul(a, g.mul(b, c)):
                    raise AssertionError(f"associativity fails at {(a, b, c)}")


def subgroup(g: FiniteGroup, elements: Iterable[int]) -> frozenset[int]:
    """Validate ``elements`` as a subgroup of ``g`` and return it as a set."""
    h = frozenset(elements)
    if any(not 0 <= x < g.order for x in h):
        raise InvalidSubgroupError("subgroup element out of range")
    if g.identity not in h:
        raise InvalidSubgroupError("subgroup lacks the identity")
    for a in h:
        if g.inv(a) not in h:
            raise InvalidSubgroupError(f"subgroup not closed under inverse at {a}")
        for b in h:
            if g.mul(a, b) not in h:
                raise InvalidSubgroupError(f"subgroup not closed at {a}*{b}")
    return h


def right_cosets(g: FiniteGroup, h: Iterable[int]) -> list[tuple[int, ...]]:
    """Right cosets ``Hx``, ordered by their smallest element."""
    h = subgroup(g, h)
    seen: set[int] = set()
    blocks = []
    for x in g.elements():
        if x in seen:
            continue
        block = tuple(sorted({g.mul(a, x) for a in h}))
        seen.update(block)
        blocks.append(block)
    return blocks
