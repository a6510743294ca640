"""Immutable undirected simple graphs over a dense integer id space.

Deleting vertices keeps the id space: removed vertices stay as degree-0
tombstones so that per-vertex arrays (coreness in particular) line up
between a graph and any graph derived from it by deletion.
"""
from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphError, ParseError


class Graph:
    __slots__ = ("_adj", "_removed", "_labels", "_m")

    def __init__(self, adjacency: Sequence[Sequence[int]], removed=(), labels=None):
        # Trusted constructor: adjacency must already be symmetric, sorted and
        # free of loops/duplicates. Use Graph.from_edges for raw input.
        self._adj = tuple(tuple(nbrs) for nbrs in adjacency)
        self._removed = frozenset(removed)
        self._labels = tuple(labels) if labels is not None else None
        if self._labels is not None and len(self._labels) != len(self._adj):
            raise GraphError("labels must have one entry per vertex")
        self._m = sum(len(a) for a in self._adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        """Build a simple graph on ids 0..n-1; loops and repeated edges are dropped."""
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u != v:
                nbrs[u].add(v)
                nbrs[v].add(u)
        return cls([sorted(s) for s in nbrs], labels=labels)

    @property
    def n(self) -> int:
        """Size of the id space (tombstones included)."""
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def removed(self) -> frozenset[int]:
        return self._removed

    @property
    def labels(self):
        return self._labels

    @property
    def live_count(self) -> int:
        return len(self._adj) - len(self._removed)

    def is_live(self, v: int) -> bool:
        return 0 <= v < len(self._adj) and v not in self._removed

    def live_vertices(self) -> list[int]:
        rem = self._removed
        return [v for v in range(len(self._adj)) if v not in rem]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels is not None else str(v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self._adj) for v in nbrs if u < v]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._removed == other._removed

    def __hash__(self):
        return hash((self._adj, self._removed))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, live={self.live_count})"


@dataclass(frozen=True)
class EdgeListReport:
    graph: Graph
    duplicates: int
    self_loops: int


def parse_edge_list(source) -> EdgeListReport:
    """Parse SNAP-style whitespace separated edge lists.

    ``source`` may be bytes, str or a binary/text file object. Vertex tokens
    are arbitrary strings, numbered densely in order of first appearance.
    Directed inputs are symmetrized; the report counts what was dropped.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        lines = io.StringIO(source)
    else:
        lines = source

    ids: dict[str, int] = {}
    labels: list[str] = []
    nbrs: list[set[int]] = []
    duplicates = loops = 0

    def vid(tok):
        i = ids.get(tok)
        if i is None:
            i = ids[tok] = len(labels)
            labels.append(tok)
            nbrs.append(set())
        return i

    for lineno, raw in enumerate(lines, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected 2 tokens, got {len(toks)}", line=lineno)
        u, v = vid(toks[0]), vid(toks[1])
        if u == v:
            loops += 1
        elif v in nbrs[u]:
            duplicates += 1
        else:
            nbrs[u].add(v)
            nbrs[v].add(u)
    g = Graph([sorted(s) for s in nbrs], labels=labels)
    return EdgeListReport(g, duplicates, loops)


def from_edge_list(source) -> Graph:
    return parse_edge_list(source).graph


def read_edge_list(path) -> Graph:
    with open(path, "rb") as fh:
        return parse_edge_list(fh).graph


def to_edge_list(g: Graph, use_labels: bool = False) -> str:
    """Serialize as sorted ``u v`` lines with u < v (ids, or labels if asked)."""
    out = []
    for u, v in g.edges():
        if use_labels:
            out.append(f"{g.label(u)} {g.label(v)}\n")
        else:
            out.append(f"{u} {v}\n")
    return "".join(out)


def delete_vertices(g: Graph, B: Iterable[int]) -> Graph:
    """Induced subgraph on V minus B, keeping B as tombstones in the id space."""
    B = frozenset(B)
    for v in B:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    if not B:
        return g
    adj = []
    for u, nbrs in enumerate(g.adjacency):
        if u in B:
            adj.append(())
        else:
            adj.append(tuple(w for w in nbrs if w not in B))
    return Graph(adj, removed=g.removed | B, labels=g.labels)


def connected_components(g: Graph) -> list[list[int]]:
    """Components of the live subgraph, each sorted, ordered by smallest id."""
    seen = set(g.removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Compacted induced subgraph; ids renumbered in increasing order, labels kept."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    adj = [[index[w] for w in g.adjacency[v] if w in index] for v in keep]
    labels = [g.label(v) for v in keep]
    return Graph(adj, labels=labels)


def largest_component(g: Graph) -> Graph:
    comps = connected_components(g)
    if not comps:
        return Graph([])
    # ties go to the component with the smallest vertex id
    best = max(comps, key=len)
    return induced_subgraph(g, best)
