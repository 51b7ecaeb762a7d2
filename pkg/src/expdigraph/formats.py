"""Line-oriented text formats.

Digraph files (``.dg``)::

    dgf 1
    name B(2,1)
    vertices 2
    label 0 zero        # optional, only for non-default labels
    arc 0 0             # one per arc, in arc-index order

Voltage files (``.vg``)::

    vgf 1
    group cyclic 2      # or: group product cyclic 2 cyclic 3
    volt 0 1            # one per arc; product elements as 1,2

Spec files carry no header; ``#`` starts a comment everywhere:

* partition: ``block <v> <v> ...``
* split: ``iota <v> <count>`` per vertex, ``assign <arc> <copy>`` per arc
  (copies are 0-based)
* arc subset: ``keep <arc>``, optionally ``choose <dropped-arc> <kept-arc>``
* expansion: ``fiber <v> <size>`` per vertex, ``map <arc> <y0> <y1> ...`` per arc
"""

from __future__ import annotations

from typing import Iterator, Optional

from .constructions import ExpansionSpec, VoltageAssignment
from .digraph import Digraph, MalformedInputError, build_digraph
from .groups import FiniteGroup, cyclic_group, product_group
from .lineops import CoverageError, SplitSpec, default_choice, make_arc_subset
from .partitions import Partition, make_partition


class ParseError(MalformedInputError):
    def __init__(self, lineno: Optional[int], reason: str):
        self.lineno = lineno
        self.reason = reason
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + reason)


class RangeError(ParseError):
    """An index or element lies outside its domain."""


class TotalityError(ParseError):
    """A required per-arc or per-vertex entry is missing or repeated."""


class CoverageParseError(ParseError):
    """An arc subset leaves some vertex without a kept in-arc."""


def _lines(text: str) -> Iterator[tuple[int, list[str], str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split(), body


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


def _ints(toks: list[str], lineno: int, count: Optional[int] = None) -> list[int]:
    if count is not None and len(toks) != count:
        raise ParseError(lineno, f"expected {count} integer(s), got {len(toks)}")
    return [_int(t, lineno) for t in toks]


def _index(tok: str, lineno: int, bound: int, what: str) -> int:
    x = _int(tok, lineno)
    if not 0 <= x < bound:
        raise RangeError(lineno, f"{what} {x} outside 0..{bound - 1}")
    return x


def _header(lines: list[tuple[int, list[str], str]], magic: str) -> None:
    if not lines or lines[0][1] != [magic, "1"]:
        lineno = lines[0][0] if lines else 1
        raise ParseError(lineno, f"expected header '{magic} 1'")


# digraphs


def parse_digraph(text: str) -> Digraph:
    lines = list(_lines(text))
    _header(lines, "dgf")
    name = ""
    n: Optional[int] = None
    labels: dict[int, str] = {}
    arcs: list[tuple[int, int]] = []
    for lineno, toks, body in lines[1:]:
        key = toks[0]
        if key == "name":
            name = body[len("name"):].strip()
        elif key == "vertices":
            if n is not None:
                raise ParseError(lineno, "duplicate 'vertices' line")
            (n,) = _ints(toks[1:], lineno, 1)
            if n < 0:
                raise RangeError(lineno, "negative vertex count")
        elif key in ("label", "arc"):
            if n is None:
                raise ParseError(lineno, f"'{key}' before 'vertices'")
            if key == "label":
                if len(toks) < 3:
                    raise ParseError(lineno, "label needs an index and a text")
                v = _index(toks[1], lineno, n, "vertex")
                if v in labels:
                    raise ParseError(lineno, f"vertex {v} labelled twice")
                labels[v] = body.split(None, 2)[2]
            else:
                if len(toks) != 3:
                    raise ParseError(lineno, "arc needs a tail and a head")
                arcs.append((_index(toks[1], lineno, n, "tail"), _index(toks[2], lineno, n, "head")))
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if n is None:
        raise ParseError(None, "missing 'vertices' line")
    return build_digraph(n, arcs, [labels.get(v, str(v)) for v in range(n)], name=name)


def write_digraph(g: Digraph) -> str:
    out = ["dgf 1"]
    if g.name:
        out.append(f"name {g.name}")
    out.append(f"vertices {g.n}")
    out += [f"label {v} {s}" for v, s in enumerate(g.labels) if s != str(v)]
    out += [f"arc {t} {h}" for t, h in g.arcs]
    return "\n".join(out) + "\n"


# voltages


def parse_group(toks: list[str], lineno: int) -> FiniteGroup:
    def cyclic(args: list[str]) -> FiniteGroup:
        if len(args) != 2 or args[0] != "cyclic":
            raise ParseError(lineno, "expected 'cyclic <n>'")
        q = _int(args[1], lineno)
        if q < 1:
            raise RangeError(lineno, f"cyclic group order {q} must be positive")
        return cyclic_group(q)

    if toks[:1] == ["cyclic"]:
        return cyclic(toks)
    if toks[:1] == ["product"] and len(toks) >= 3 and len(toks) % 2 == 1:
        return product_group([cyclic(toks[i:i + 2]) for i in range(1, len(toks), 2)])
    raise ParseError(lineno, "expected 'cyclic <n>' or 'product cyclic <n1> cyclic <n2> ...'")


def parse_voltage(text: str, target: Digraph) -> VoltageAssignment:
    lines = list(_lines(text))
    _header(lines, "vgf")
    group: Optional[FiniteGroup] = None
    volts: dict[int, int] = {}
    for lineno, toks, _ in lines[1:]:
        key = toks[0]
        if key == "group":
            if group is not None:
                raise ParseError(lineno, "duplicate 'group' line")
            group = parse_group(toks[1:], lineno)
        elif key == "volt":
            if group is None:
                raise ParseError(lineno, "'volt' before 'group'")
            if len(toks) != 3:
                raise ParseError(lineno, "volt needs an arc index and an element")
            e = _index(toks[1], lineno, target.m, "arc")
            if e in volts:
                raise TotalityError(lineno, f"arc {e} given two voltages")
            try:
                volts[e] = group.parse(toks[2])
            except MalformedInputError as exc:
                raise RangeError(lineno, str(exc)) from None
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if group is None:
        raise ParseError(None, "missing 'group' line")
    missing = [e for e in range(target.m) if e not in volts]
    if missing:
        raise TotalityError(None, f"no voltage for arcs {missing}")
    return VoltageAssignment(group, tuple(volts[e] for e in range(target.m)))


def write_voltage(va: VoltageAssignment) -> str:
    out = ["vgf 1", f"group {va.group.describe()}"]
    out += [f"volt {e} {va.group.render(a)}" for e, a in enumerate(va.voltages)]
    return "\n".join(out) + "\n"


# spec files


def _check_keys(lineno: int, key: str, allowed: tuple[str, ...]) -> None:
    if key not in allowed:
        raise ParseError(lineno, f"unknown directive {key!r}")


def parse_partition(text: str, target: Digraph) -> Partition:
    blocks = []
    where: dict[int, int] = {}
    for lineno, toks, _ in _lines(text):
        _check_keys(lineno, toks[0], ("block",))
        if len(toks) < 2:
            raise ParseError(lineno, "empty block")
        block = [_index(t, lineno, target.n, "vertex") for t in toks[1:]]
        for v in block:
            if v in where:
                raise TotalityError(lineno, f"vertex {v} already in block {where[v]}")
            where[v] = len(blocks)
        blocks.append(block)
    missing = [v for v in range(target.n) if v not in where]
    if missing:
        raise TotalityError(None, f"vertices {missing} are in no block")
    return make_partition(blocks, target.n)


def write_partition(p: Partition) -> str:
    return "".join("block " + " ".join(map(str, b)) + "\n" for b in p)


def parse_split(text: str, target: Digraph) -> SplitSpec:
    iota: dict[int, int] = {}
    assign: dict[int, int] = {}
    for lineno, toks, _ in _lines(text):
        _check_keys(lineno, toks[0], ("iota", "assign"))
        if len(toks) != 3:
            raise ParseError(lineno, f"{toks[0]} needs two integers")
        if toks[0] == "iota":
            v = _index(toks[1], lineno, target.n, "vertex")
            if v in iota:
                raise TotalityError(lineno, f"vertex {v} given two copy counts")
            iota[v] = _int(toks[2], lineno)
        else:
            e = _index(toks[1], lineno, target.m, "arc")
            if e in assign:
                raise TotalityError(lineno, f"arc {e} assigned twice")
            assign[e] = _int(toks[2], lineno)
    missing_v = [v for v in range(target.n) if v not in iota]
    missing_e = [e for e in range(target.m) if e not in assign]
    if missing_v:
        raise TotalityError(None, f"no copy count for vertices {missing_v}")
    if missing_e:
        raise TotalityError(None, f"no copy assignment for arcs {missing_e}")
    spec = SplitSpec(tuple(iota[v] for v in range(target.n)), tuple(assign[e] for e in range(target.m)))
    spec.validate(target)
    return spec


def write_split(spec: SplitSpec) -> str:
    out = [f"iota {v} {k}" for v, k in enumerate(spec.iota)]
    out += [f"assign {e} {j}" for e, j in enumerate(spec.assign)]
    return "\n".join(out) + "\n"


def parse_arc_subset(text: str, target: Digraph) -> tuple[tuple[int, ...], dict[int, int]]:
    """Kept arcs and the full choice function (defaults filled in)."""
    keep: list[int] = []
    choose: dict[int, tuple[int, int]] = {}
    for lineno, toks, _ in _lines(text):
        _check_keys(lineno, toks[0], ("keep", "choose"))
        if toks[0] == "keep":
            if len(toks) != 2:
                raise ParseError(lineno, "keep needs one arc index")
            keep.append(_index(toks[1], lineno, target.m, "arc"))
        else:
            if len(toks) != 3:
                raise ParseError(lineno, "choose needs a dropped arc and a kept arc")
            f = _index(toks[1], lineno, target.m, "arc")
            if f in choose:
                raise TotalityError(lineno, f"arc {f} given two representatives")
            choose[f] = (_index(toks[2], lineno, target.m, "arc"), lineno)
    try:
        es = make_arc_subset(target, keep)
    except CoverageError as exc:
        raise CoverageParseError(None, str(exc)) from None
    kept = set(es)
    cf = default_choice(target, es)
    for f, (r, lineno) in choose.items():
        if f in kept:
            raise ParseError(lineno, f"arc {f} is kept, it cannot be given a representative")
        if r not in kept:
            raise ParseError(lineno, f"representative {r} is not a kept arc")
        if target.arcs[r][1] != target.arcs[f][1]:
            raise ParseError(lineno, f"arcs {f} and {r} have different heads")
        cf[f] = r
    return es, cf


def write_arc_subset(es: tuple[int, ...], cf: Optional[dict[int, int]] = None) -> str:
    out = [f"keep {e}" for e in es]
    out += [f"choose {f} {r}" for f, r in sorted((cf or {}).items())]
    return "\n".join(out) + "\n"


def parse_expansion(text: str, target: Digraph) -> ExpansionSpec:
    sizes: dict[int, int] = {}
    maps: dict[int, tuple[int, ...]] = {}
    for lineno, toks, _ in _lines(text):
        _check_keys(lineno, toks[0], ("fiber", "map"))
        if toks[0] == "fiber":
            if len(toks) != 3:
                raise ParseError(lineno, "fiber needs a vertex and a size")
            v = _index(toks[1], lineno, target.n, "vertex")
            if v in sizes:
                raise TotalityError(lineno, f"vertex {v} given two fibers")
            sizes[v] = _int(toks[2], lineno)
            if sizes[v] < 1:
                raise RangeError(lineno, "fiber size must be positive")
        else:
            if len(toks) < 2:
                raise ParseError(lineno, "map needs an arc index")
            e = _index(toks[1], lineno, target.m, "arc")
            if e in maps:
                raise TotalityError(lineno, f"arc {e} given two maps")
            maps[e] = tuple(_ints(toks[2:], lineno))
    missing_v = [v for v in range(target.n) if v not in sizes]
    missing_e = [e for e in range(target.m) if e not in maps]
    if missing_v:
        raise TotalityError(None, f"no fiber for vertices {missing_v}")
    if missing_e:
        raise TotalityError(None, f"no map for arcs {missing_e}")
    spec = ExpansionSpec(tuple(sizes[v] for v in range(target.n)), tuple(maps[e] for e in range(target.m)))
    try:
        spec.validate(target)
    except MalformedInputError as exc:
        raise RangeError(None, str(exc)) from None
    return spec


def write_expansion(spec: ExpansionSpec) -> str:
    out = [f"fiber {v} {s}" for v, s in enumerate(spec.fiber_sizes)]
    out += ["map " + " ".join(map(str, (e, *phi))) for e, phi in enumerate(spec.maps)]
    return "\n".join(out) + "\n"


SPEC_PARSERS = {
    "partition": parse_partition,
    "split": parse_split,
    "subset": parse_arc_subset,
    "expansion": parse_expansion,
}


def parse_spec(text: str, kind: str, target: Digraph):
    try:
        parser = SPEC_PARSERS[kind]
    except KeyError:
        raise ValueError(f"unknown spec kind {kind!r}") from None
    return parser(text, target)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Digraph) -> str:
    out = [f"digraph {_quote(g.name or 'G')} {{"]
    out += [f"  {v} [label={_quote(s)}];" for v, s in enumerate(g.labels)]
    out += [f"  {t} -> {h};" for t, h in g.arcs]
    out.append("}")
    return "\n".join(out) + "\n"
