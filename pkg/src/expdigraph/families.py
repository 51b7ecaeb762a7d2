"""De Bruijn and Kautz digraphs, their difference coordinates, and the
voltage assignments that realize them as lifts of smaller De Bruijn digraphs.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .constructions import VoltageAssignment
from .digraph import Digraph, MalformedInputError, build_digraph
from .groups import cyclic_group

Word = tuple[int, ...]


def word_label(w: Sequence[int]) -> str:
    if all(0 <= s < 10 for s in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def _shift_digraph(words: list[Word], successors, name: str, labels=None) -> Digraph:
    index = {w: i for i, w in enumerate(words)}
    arcs = [(i, index[s]) for i, w in enumerate(words) for s in successors(w)]
    if labels is None:
        labels = [word_label(w) for w in words]
    return build_digraph(len(words), arcs, labels, name=name)


def de_bruijn(alphabet: Sequence[int] | int, k: int) -> Digraph:
    """``B(A, k)``: words of length ``k`` over ``A``, ``x1..xk -> x2..xk y``.

    An integer alphabet ``d`` means ``Z_d``. Arcs out of a word are ordered by
    the position of ``y`` in the alphabet.
    """
    A = tuple(range(alphabet)) if isinstance(alphabet, int) else tuple(alphabet)
    if not A:
        raise MalformedInputError("empty alphabet")
    if len(set(A)) != len(A):
        raise MalformedInputError("alphabet symbols must be distinct")
    if k < 1:
        raise MalformedInputError(f"word length must be positive, got {k}")
    words = list(product(A, repeat=k))
    name = f"B({len(A)},{k})" if A == tuple(range(len(A))) else f"B({{{','.join(map(str, A))}}},{k})"
    return _shift_digraph(words, lambda w: [w[1:] + (y,) for y in A], name)


def kautz_words(d: int, k: int) -> list[Word]:
    return [w for w in product(range(d + 1), repeat=k) if all(a != b for a, b in zip(w, w[1:]))]


def kautz(d: int, k: int) -> Digraph:
    """``K(d, k)``: words over ``Z_{d+1}`` with distinct consecutive symbols."""
    if d < 1 or k < 1:
        raise MalformedInputError(f"Kautz digraph needs d >= 1 and k >= 1, got ({d}, {k})")
    return _shift_digraph(
        kautz_words(d, k),
        lambda w: [w[1:] + (y,) for y in range(d + 1) if y != w[-1]],
        f"K({d},{k})",
    )


def phi(w: Sequence[int], m: int) -> tuple[int, Word]:
    """First symbol and the consecutive differences mod ``m``."""
    if not w:
        raise MalformedInputError("empty word")
    return w[0] % m, tuple((b - a) % m for a, b in zip(w, w[1:]))


def phi_inv(prefix: int, diffs: Sequence[int], m: int) -> Word:
    """Running partial sums mod ``m``; inverse of :func:`phi`."""
    out = [prefix % m]
    for b in diffs:
        out.append((out[-1] + b) % m)
    return tuple(out)


def phi_star(w: Sequence[int], d: int) -> Word:
    """Difference word of a Kautz word; every symbol lands in ``1..d``."""
    m = d + 1
    if any(not 0 <= s < m for s in w):
        raise MalformedInputError(f"{tuple(w)} is not a word over Z_{m}")
    _, diffs = phi(w, m)
    if 0 in diffs:
        raise MalformedInputError(f"{tuple(w)} repeats a symbol consecutively; not a Kautz word")
    return diffs


def _alt_label(prefix: int, diffs: Word) -> str:
    return f"{prefix};{word_label(diffs)}"


def alt_de_bruijn(d: int, k: int) -> Digraph:
    """De Bruijn digraph in difference coordinates ``b1;b2..bk``.

    ``b1;b2 b3..bk -> b1+b2;b3..bk c`` for every ``c`` in ``Z_d``.
    """
    if k < 2:
        raise MalformedInputError("difference coordinates need k >= 2")
    verts = [(a, w) for a in range(d) for w in product(range(d), repeat=k - 1)]
    index = {v: i for i, v in enumerate(verts)}
    arcs = [
        (i, index[((a + w[0]) % d, w[1:] + (c,))])
        for i, (a, w) in enumerate(verts)
        for c in range(d)
    ]
    return build_digraph(len(verts), arcs, [_alt_label(a, w) for a, w in verts], name=f"altB({d},{k})")


def alt_kautz(d: int, k: int) -> Digraph:
    """Kautz digraph in difference coordinates ``a;b2..bk`` with nonzero ``b``.

    ``a;b2 b3..bk -> a+b2;b3..bk c`` for every nonzero ``c`` in ``Z_{d+1}``.
    """
    if k < 2:
        raise MalformedInputError("difference coordinates need k >= 2")
    m = d + 1
    verts = [(a, w) for a in range(m) for w in product(range(1, m), repeat=k - 1)]
    index = {v: i for i, v in enumerate(verts)}
    arcs = [
        (i, index[((a + w[0]) % m, w[1:] + (c,))])
        for i, (a, w) in enumerate(verts)
        for c in range(1, m)
    ]
    return build_digraph(len(verts), arcs, [_alt_label(a, w) for a, w in verts], name=f"altK({d},{k})")


def arc_word(g: Digraph, words: list[Word], e: int) -> Word:
    """The length-(k+1) word ``x1..xk y`` of a shift-digraph arc."""
    t, h = g.arcs[e]
    return words[t] + (words[h][-1],)


def _first_symbol_voltage(alphabet: Sequence[int], k: int, modulus: int):
    base = de_bruijn(alphabet, k)
    words = list(product(tuple(alphabet), repeat=k))
    G = cyclic_group(modulus)
    volts = tuple(arc_word(base, words, e)[0] % modulus for e in range(base.m))
    return base, VoltageAssignment(G, volts)


def prop1_voltage(d: int, k: int) -> tuple[Digraph, VoltageAssignment]:
    """Base ``B(d,k)`` over ``Z_d``; the arc ``x1..x(k+1)`` carries ``x1``.

    Its lift is ``B(d, k+1)``: the lift vertex ``(x1..xk, a)`` is the word
    ``phi_inv(a, x1..xk)``.
    """
    if d < 2 or k < 1:
        raise MalformedInputError(f"need d >= 2 and k >= 1, got ({d}, {k})")
    return _first_symbol_voltage(range(d), k, d)


def prop2_voltage(d: int, k: int) -> tuple[Digraph, VoltageAssignment]:
    """Base ``B`` over the nonzero symbols ``1..d``, voltages in ``Z_{d+1}``.

    Same voltage rule as :func:`prop1_voltage`; the lift is ``K(d, k+1)``.
    """
    if d < 2 or k < 1:
        raise MalformedInputError(f"need d >= 2 and k >= 1, got ({d}, {k})")
    return _first_symbol_voltage(range(1, d + 1), k, d + 1)


def lift_word_map(base_words: list[Word], group_order: int) -> list[Word]:
    """Explicit lift-to-word correspondence ``(w, a) -> phi_inv(a, w)``.

    Indexed like the lift's vertices: base vertex major, group element minor.
    """
    return [phi_inv(a, w, group_order) for w in base_words for a in range(group_order)]
