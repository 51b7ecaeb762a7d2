"""Diameter and mean distance of random partial line digraphs against their bases.

    python3 scripts/sweep_distances.py --trials 300 --max-n 6
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from expdigraph.digraph import is_strongly_connected, metrics
from expdigraph.lineops import partial_line_digraph
from expdigraph.randgen import random_arc_subset, random_choice, random_strong_noncycle


@dataclass
class SweepConfig:
    trials: int = 300
    max_n: int = 6
    seed: int = 0


def run(cfg: SweepConfig) -> tuple[Counter, int, Fraction]:
    """Count D* - D, strongly connected results, and the largest mean gap."""
    rng = random.Random(cfg.seed)
    gaps: Counter = Counter()
    strong = 0
    worst = Fraction(-10)
    for _ in range(cfg.trials):
        g = random_strong_noncycle(rng, cfg.max_n)
        es = random_arc_subset(rng, g, rng.randint(g.n + 1, g.m))
        p = partial_line_digraph(g, es, random_choice(rng, g, es))
        if not is_strongly_connected(p):
            continue
        strong += 1
        mg, mp = metrics(g), metrics(p)
        gaps[mp.diameter - mg.diameter] += 1
        worst = max(worst, mp.mean_distance - mg.mean_distance)
    return gaps, strong, worst


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    gaps, strong, worst = run(cfg)
    print(f"strongly connected results: {strong}/{cfg.trials}")
    for gap, count in sorted(gaps.items()):
        print(f"D* - D = {gap}: {count}")
    print(f"largest mean-distance increase: {worst} (~{float(worst):.4f})")


if __name__ == "__main__":
    main()
