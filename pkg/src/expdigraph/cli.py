"""Command-line entry point.

Exit codes: 0 success or check true, 1 check false or not isomorphic,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, Sequence

from . import formats
from .constructions import cayley_digraph, expand, lift
from .digraph import Digraph, MalformedInputError, metrics
from .families import alt_de_bruijn, alt_kautz, de_bruijn, kautz, prop1_voltage, prop2_voltage
from .groups import InvalidSubgroupError, cyclic_group
from .iso import IsoBudgetExceeded, is_isomorphic
from .lineops import (
    NotALineDigraphError,
    SearchBudgetExceeded,
    heuchenne_is_line,
    line_digraph,
    partial_line_digraph,
    prop4_condition,
    vertex_split,
)
from .partitions import NonRegularPartitionError, check_regular, quotient, verify_commutation

OK, FALSE, ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> Digraph:
    try:
        return formats.parse_digraph(_read(path))
    except MalformedInputError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_spec(path: str, kind: str, target: Digraph):
    try:
        return formats.parse_spec(_read(path), kind, target)
    except MalformedInputError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_voltage(path: str, target: Digraph):
    try:
        return formats.parse_voltage(_read(path), target)
    except MalformedInputError as exc:
        raise CliError(f"{path}: {exc}") from None


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_digraph(args: argparse.Namespace, g: Digraph) -> int:
    _emit(args, formats.write_digraph(g))
    return OK


def _verdict(args: argparse.Namespace, ok: bool, detail: str = "") -> int:
    _emit(args, ("true" if ok else "false") + (f"\n{detail}" if detail else "") + "\n")
    return OK if ok else FALSE


# gen


def cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    if fam == "cayley":
        if args.group != "cyclic":
            raise CliError("only 'cayley cyclic <n> <g1,g2,...>' is supported")
        G = cyclic_group(args.n)
        try:
            gens = [G.parse(t) for t in args.gens.split(",")]
        except MalformedInputError as exc:
            raise CliError(str(exc)) from None
        return _emit_digraph(args, cayley_digraph(G, gens))
    if fam in ("prop1", "prop2"):
        base, va = (prop1_voltage if fam == "prop1" else prop2_voltage)(args.d, args.k)
        if args.voltage_out:
            with open(args.voltage_out, "w") as fh:
                fh.write(formats.write_voltage(va))
        return _emit_digraph(args, base)
    builders: dict[str, Callable[[int, int], Digraph]] = {
        "debruijn": de_bruijn,
        "kautz": kautz,
        "altdebruijn": alt_de_bruijn,
        "altkautz": alt_kautz,
    }
    return _emit_digraph(args, builders[fam](args.d, args.k))


def cmd_lift(args: argparse.Namespace) -> int:
    base = _load(args.base)
    va = _load_voltage(args.voltage, base)
    g = lift(base, va).digraph
    name = f"{base.name}^alpha" if base.name else ""
    return _emit_digraph(args, g.relabeled(name=name))


def cmd_expand(args: argparse.Namespace) -> int:
    base = _load(args.base)
    spec = _load_spec(args.spec, "expansion", base)
    return _emit_digraph(args, expand(base, spec).digraph)


def cmd_line(args: argparse.Namespace) -> int:
    return _emit_digraph(args, line_digraph(_load(args.input)))


def cmd_plift(args: argparse.Namespace) -> int:
    g = _load(args.input)
    es, cf = _load_spec(args.keep, "subset", g)
    return _emit_digraph(args, partial_line_digraph(g, es, cf))


def cmd_split(args: argparse.Namespace) -> int:
    g = _load(args.input)
    return _emit_digraph(args, vertex_split(g, _load_spec(args.spec, "split", g)))


def cmd_quotient(args: argparse.Namespace) -> int:
    g = _load(args.input)
    return _emit_digraph(args, quotient(g, _load_spec(args.partition, "partition", g)))


def cmd_check(args: argparse.Namespace) -> int:
    what = args.what
    g = _load(args.input)
    if what == "heuchenne":
        return _verdict(args, heuchenne_is_line(g))
    if what in ("regular", "commute"):
        if not args.partition:
            raise CliError(f"check {what} needs --partition")
        p = _load_spec(args.partition, "partition", g)
        if what == "commute":
            return _verdict(args, verify_commutation(g, p))
        r = check_regular(g, p)
        if r.regular:
            detail = "\n".join(" ".join(map(str, row)) for row in r.matrix)  # type: ignore[union-attr]
        else:
            u, v, j = r.witness  # type: ignore[misc]
            detail = f"witness {u} {v} block {j}"
        return _verdict(args, r.regular, detail)
    if what == "liftline":
        if not args.voltage:
            raise CliError("check liftline needs a voltage file")
        va = _load_voltage(args.voltage, g)
        report = prop4_condition(g, va)
        lifted = heuchenne_is_line(lift(g, va).digraph)
        detail = f"lift-is-line {'true' if lifted else 'false'}"
        if report.witness:
            detail = "witness " + " ".join(map(str, report.witness)) + "\n" + detail
        return _verdict(args, report.holds, detail)
    raise CliError(f"unknown check {what!r}")


def cmd_iso(args: argparse.Namespace) -> int:
    a, b = _load(args.first), _load(args.second)
    sigma = is_isomorphic(a, b, node_budget=args.budget)
    if sigma is None:
        _emit(args, "not isomorphic\n")
        return FALSE
    _emit(args, "".join(f"{u} {x}\n" for u, x in enumerate(sigma)))
    return OK


def cmd_stats(args: argparse.Namespace) -> int:
    _emit(args, "\n".join(metrics(_load(args.input)).as_lines()) + "\n")
    return OK


def cmd_dot(args: argparse.Namespace) -> int:
    _emit(args, formats.export_dot(_load(args.input)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="expdigraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", help="write to this file instead of stdout")

    def command(name: str, func, help: str, output: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[out] if output else [])
        p.set_defaults(func=func)
        return p

    # -o lives on the family parsers so it can follow the family arguments
    gen = command("gen", cmd_gen, "generate a named digraph family", output=False)
    fams = gen.add_subparsers(dest="family", required=True)
    for fam in ("debruijn", "kautz", "altdebruijn", "altkautz", "prop1", "prop2"):
        f = fams.add_parser(fam, parents=[out])
        f.add_argument("d", type=int)
        f.add_argument("k", type=int)
        if fam.startswith("prop"):
            f.add_argument("--voltage-out", help="also write the voltage assignment here")
    cay = fams.add_parser("cayley", parents=[out])
    cay.add_argument("group", choices=["cyclic"])
    cay.add_argument("n", type=int)
    cay.add_argument("gens", help="comma-separated generators")

    p = command("lift", cmd_lift, "lift a base digraph by a voltage file")
    p.add_argument("base")
    p.add_argument("voltage")
    p = command("expand", cmd_expand, "expand a base digraph by an expansion file")
    p.add_argument("base")
    p.add_argument("spec")
    p = command("line", cmd_line, "line digraph")
    p.add_argument("input", nargs="?", default="-")
    p = command("plift", cmd_plift, "partial line digraph")
    p.add_argument("input")
    p.add_argument("--keep", required=True, help="arc-subset file")
    p = command("split", cmd_split, "vertex-split digraph")
    p.add_argument("input")
    p.add_argument("--spec", required=True, help="split file")
    p = command("quotient", cmd_quotient, "quotient by a regular partition")
    p.add_argument("input")
    p.add_argument("--partition", required=True)
    p = command("check", cmd_check, "run a structural check")
    p.add_argument("what", choices=["heuchenne", "regular", "liftline", "commute"])
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("voltage", nargs="?", help="voltage file (liftline)")
    p.add_argument("--partition", help="partition file (regular, commute)")
    p = command("iso", cmd_iso, "test two digraphs for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p = command("stats", cmd_stats, "order, size, degrees, diameter, mean distance")
    p.add_argument("input", nargs="?", default="-")
    p = command("dot", cmd_dot, "Graphviz export")
    p.add_argument("input", nargs="?", default="-")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    try:
        return args.func(args)
    except (
        CliError,
        MalformedInputError,
        InvalidSubgroupError,
        NonRegularPartitionError,
        NotALineDigraphError,
        IsoBudgetExceeded,
        SearchBudgetExceeded,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
