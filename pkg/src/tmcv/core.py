"""k-core decomposition and coreness maintenance under vertex deletion."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class CoreDecomposition:
    coreness: tuple[int, ...]
    degeneracy: int
    removed: frozenset = frozenset()

    def core_size_histogram(self) -> dict[int, int]:
        """Number of live vertices with each exact coreness value."""
        rem = self.removed
        hist = Counter(c for v, c in enumerate(self.coreness) if v not in rem)
        return dict(sorted(hist.items()))


def _peel(adj, n) -> list[int]:
    # Batagelj-Zaversnik bucket peel, O(n + m). Removed vertices have empty
    # adjacency in a tombstoned Graph, so they simply end with coreness 0.
    deg = [len(a) for a in adj]
    if n == 0:
        return deg
    md = max(deg)
    bins = [0] * (md + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(md + 1):
        c = bins[d]
        bins[d] = start
        start += c
    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        p = bins[deg[v]]
        pos[v] = p
        vert[p] = v
        bins[deg[v]] += 1
    for d in range(md, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0
    for i in range(n):
        v = vert[i]
        dv = deg[v]
        for u in adj[v]:
            du = deg[u]
            if du > dv:
                pu = pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bins[du] += 1
                deg[u] = du - 1
    return deg


def core_decompose(g: Graph) -> CoreDecomposition:
    core = _peel(g.adjacency, g.n)
    return CoreDecomposition(tuple(core), max(core, default=0), g.removed)


def k_core_members(d: CoreDecomposition, k: int) -> set[int]:
    if k < 0:
        raise ValueError("k must be non-negative")
    rem = d.removed
    return {v for v, c in enumerate(d.coreness) if c >= k and v not in rem}


class DeletionTracker:
    """Current coreness of a graph under a growing sequence of vertex deletions.

    Deleting one vertex lowers the coreness of any other vertex by at most one,
    and a vertex u can only drop if c(u) <= c(v) for the deleted v. So the
    vertices that drop are found by peeling inside each coreness level,
    starting from v's neighbours, without touching the rest of the graph.

    ``original`` is the coreness before any deletion; a vertex counts as
    affected once its current coreness is below its original one.
    """

    def __init__(self, g: Graph, base: CoreDecomposition | None = None):
        if base is None:
            base = core_decompose(g)
        self.graph = g
        self.original = base.coreness
        self.core = list(base.coreness)
        self.alive = [True] * g.n
        for v in g.removed:
            self.alive[v] = False
        self.deleted: list[int] = []
        self.affected = 0

    def is_prunable(self, v: int) -> bool:
        """True when every live neighbour has strictly larger current coreness."""
        cv = self.core[v]
        alive, core = self.alive, self.core
        for u in self.graph.adjacency[v]:
            if alive[u] and core[u] <= cv:
                return False
        return True

    def drops(self, v: int) -> list[int]:
        """Vertices whose current coreness would fall if v were deleted now."""
        cv = self.core[v]
        if cv == 0:
            return []
        adj = self.graph.adjacency
        alive, core = self.alive, self.core
        evicted: set[int] = set()
        done: set[int] = set()
        support: dict[int, int] = {}

        def count(u):
            # same-level vertices already processed no longer give support;
            # evicted-but-pending ones are subtracted when they are processed
            k = core[u]
            s = 0
            for w in adj[u]:
                if w != v and alive[w] and core[w] >= k and not (core[w] == k and w in done):
                    s += 1
            return s

        for u in adj[v]:
            if alive[u] and 0 < core[u] <= cv:
                support[u] = count(u)
        stack = [u for u in support if support[u] < core[u]]
        evicted.update(stack)
        while stack:
            w = stack.pop()
            done.add(w)
            k = core[w]
            for x in adj[w]:
                if x == v or not alive[x] or core[x] != k or x in evicted:
                    continue
                if x in support:
                    support[x] -= 1
                else:
                    support[x] = count(x)
                if support[x] < k:
                    evicted.add(x)
                    stack.append(x)
        return sorted(evicted)

    def gain(self, v: int, prune: bool = True) -> int:
        """Change in the affected count f if v is deleted next."""
        lost = 1 if self.core[v] < self.original[v] else 0
        if prune and self.is_prunable(v):
            return -lost
        orig, core = self.original, self.core
        new = sum(1 for u in self.drops(v) if core[u] == orig[u])
        return new - lost

    def delete(self, v: int) -> int:
        """Delete v, update coreness, return the change in the affected count."""
        if not self.alive[v]:
            raise ValueError(f"vertex {v} is not live")
        dropped = self.drops(v)
        orig, core = self.original, self.core
        delta = -1 if core[v] < orig[v] else 0
        for u in dropped:
            if core[u] == orig[u]:
                delta += 1
            core[u] -= 1
        self.alive[v] = False
        core[v] = 0
        self.deleted.append(v)
        self.affected += delta
        return delta

    def affected_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.core) if self.alive[v] and c < self.original[v]]
