"""Write DOT files for the small De Bruijn and Kautz lifts and the commutation counterexample.

    python3 scripts/render_examples.py --out dot/
"""

import argparse
from pathlib import Path

from expdigraph.constructions import lift
from expdigraph.families import de_bruijn, kautz, prop1_voltage, prop2_voltage
from expdigraph.formats import export_dot
from expdigraph.iso import is_isomorphic
from expdigraph.lineops import line_digraph
from expdigraph.partitions import induced_arc_partition, quotient


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="dot", type=Path)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    outputs = {}
    for tag, make, target in (("debruijn", prop1_voltage, de_bruijn), ("kautz", prop2_voltage, kautz)):
        base, va = make(2, 2)
        lifted = lift(base, va).digraph
        assert is_isomorphic(lifted, target(2, 3)) is not None
        outputs[f"{tag}_base.dot"] = export_dot(base)
        outputs[f"{tag}_lift.dot"] = export_dot(lifted)
        print(f"{tag}: base n={base.n} m={base.m}, lift n={lifted.n} m={lifted.m}")

    # one block over B(2,2): the quotient has two loops and its line digraph two
    # vertices, but the induced arc partition has one block
    b22 = de_bruijn(2, 2)
    q = quotient(b22, [range(4)])
    outputs["collapse_quotient.dot"] = export_dot(q)
    outputs["collapse_quotient_line.dot"] = export_dot(line_digraph(q))
    blocks = induced_arc_partition(b22, [range(4)])
    print(f"one-block quotient: L has {line_digraph(q).n} vertices, induced partition {len(blocks)} block(s)")

    for name, text in outputs.items():
        (args.out / name).write_text(text)
    print(f"wrote {len(outputs)} files to {args.out}")


if __name__ == "__main__":
    main()
