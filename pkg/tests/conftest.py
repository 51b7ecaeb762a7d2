import random
from collections import Counter
from itertools import permutations
from pathlib import Path

import pytest

from expdigraph.digraph import Digraph

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng():
    return random.Random(20160717)


@pytest.fixture
def fixtures():
    return FIXTURES


def floyd_warshall(g: Digraph):
    """Distance oracle independent of the library's breadth-first search."""
    inf = float("inf")
    d = [[0 if u == v else inf for v in range(g.n)] for u in range(g.n)]
    for t, h in g.arcs:
        if t != h:
            d[t][h] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return [[None if x == inf else int(x) for x in row] for row in d]


def brute_iso(g1: Digraph, g2: Digraph) -> bool:
    """Isomorphism by trying every bijection; only for tiny digraphs."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    target = Counter(g2.arcs)
    return any(
        Counter((p[t], p[h]) for t, h in g1.arcs) == target for p in permutations(range(g1.n))
    )


# acceptance criteria record their verdicts here; printed in the terminal summary
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
