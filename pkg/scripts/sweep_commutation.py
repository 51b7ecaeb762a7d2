"""Tally commutation of line digraph and quotient over random lift fibers.

Splits the outcomes by whether the quotient (the base) is simple.

    python3 scripts/sweep_commutation.py --trials 500 --max-n 5
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from expdigraph.constructions import lift
from expdigraph.groups import cyclic_group
from expdigraph.partitions import verify_commutation
from expdigraph.randgen import random_digraph, random_voltages


@dataclass
class SweepConfig:
    trials: int = 500
    max_n: int = 5
    max_m: int = 10
    min_group: int = 2
    max_group: int = 4
    seed: int = 0


def run(cfg: SweepConfig) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.trials):
        base = random_digraph(rng, rng.randint(1, cfg.max_n), rng.randint(0, cfg.max_m))
        G = cyclic_group(rng.randint(cfg.min_group, cfg.max_group))
        fd = lift(base, random_voltages(rng, base, G))
        tally[base.is_simple(), verify_commutation(fd.digraph, fd.fibers())] += 1
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    tally = run(cfg)
    print(f"{'quotient':>12} {'commutes':>9} {'count':>6}")
    for (simple, ok), count in sorted(tally.items()):
        print(f"{'simple' if simple else 'multi':>12} {str(ok):>9} {count:>6}")


if __name__ == "__main__":
    main()
