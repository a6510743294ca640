import random
import sys
from itertools import combinations

import pytest

from tmcv.graph import Graph


def naive_coreness(n, edges, removed=()):
    """Fixed-point oracle: for each k, delete degree < k vertices until stable."""
    removed = set(removed)
    nbrs = {v: set() for v in range(n) if v not in removed}
    for u, v in edges:
        if u in nbrs and v in nbrs and u != v:
            nbrs[u].add(v)
            nbrs[v].add(u)
    core = {v: 0 for v in nbrs}
    k = 1
    while True:
        alive = set(nbrs)
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if len(nbrs[v] & alive) < k:
                    alive.discard(v)
                    changed = True
        if not alive:
            break
        for v in alive:
            core[v] = k
        k += 1
    return [core.get(v, 0) for v in range(n)]


def naive_affected(g, B):
    """Recompute coreness from scratch before and after deleting B."""
    edges = g.edges()
    before = naive_coreness(g.n, edges, g.removed)
    after = naive_coreness(g.n, edges, set(g.removed) | set(B))
    return {v for v in range(g.n)
            if v not in B and v not in g.removed and after[v] < before[v]}


def naive_best(g, cands, b):
    """Best f over all subsets of size <= b, by brute force on the naive oracle."""
    best = 0
    for k in range(1, b + 1):
        for B in combinations(cands, k):
            best = max(best, len(naive_affected(g, set(B))))
    return best


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_forest(rng, n, p_edge=0.85):
    edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < p_edge]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def disjoint_union(*graphs):
    edges, off = [], 0
    for g in graphs:
        edges += [(u + off, v + off) for u, v in g.edges()]
        off += g.n
    return Graph.from_edges(off, edges)


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def k4():
    return complete(4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
