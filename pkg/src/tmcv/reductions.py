"""Graph constructions that turn Set Cover instances into TMCV instances.

Each generator returns the graph together with its candidate set, budget,
the f value that certifies a yes-instance, and a role tag per vertex.
Element ids are 1-based (u_1..u_n), set ids are 1-based (S_1..S_m).

Vertex ids are laid out block by block: P cliques, then Q vertices, then R
vertices, then the gadget, each block in index order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError
from .graph import Graph


@dataclass(frozen=True)
class SetCoverInstance:
    n: int
    sets: tuple[frozenset[int], ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        if self.n < 1:
            raise ValueError("universe must be non-empty")
        if self.r < 0:
            raise ValueError("target r must be non-negative")
        for i, s in enumerate(self.sets, start=1):
            if not s:
                raise ValueError(f"set S_{i} is empty")
            if not s <= set(range(1, self.n + 1)):
                raise ValueError(f"set S_{i} has elements outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.sets)

    def is_exact_cover_shape(self) -> bool:
        """Every set has 3 elements and every element lies in exactly 2 sets."""
        if any(len(s) != 3 for s in self.sets):
            return False
        counts = [0] * (self.n + 1)
        for s in self.sets:
            for u in s:
                counts[u] += 1
        return all(c == 2 for c in counts[1:])

    @classmethod
    def from_json(cls, data) -> "SetCoverInstance":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(frozenset(s) for s in data["sets"]), int(data["r"]))

    def to_json(self) -> dict:
        return {"n": self.n, "sets": [sorted(s) for s in self.sets], "r": self.r}


def min_cover_size(inst: SetCoverInstance) -> int | None:
    """Smallest cover size by enumeration, or None if the sets do not cover U."""
    universe = frozenset(range(1, inst.n + 1))
    for k in range(0, inst.m + 1):
        for combo in combinations(inst.sets, k):
            if frozenset().union(*combo) == universe:
                return k
    return None


@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    candidates: tuple[int, ...]
    budget: int
    yes_threshold: int
    roles: tuple[str, ...]

    def hubs_for(self, set_indices) -> list[int]:
        """Candidate vertices P_{i,1} for the given 1-based set indices."""
        return [self.candidates[i - 1] for i in set_indices]

    def to_json(self) -> dict:
        return {
            "candidates": list(self.candidates),
            "budget": self.budget,
            "yes_threshold": self.yes_threshold,
            "roles": list(self.roles),
        }


class _Builder:
    def __init__(self):
        self.roles: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, role: str) -> int:
        self.roles.append(role)
        return len(self.roles) - 1

    def clique(self, ids):
        self.edges.extend(combinations(ids, 2))

    def build(self) -> Graph:
        return Graph.from_edges(len(self.roles), self.edges, labels=self.roles)


def _add_set_cliques(bld: _Builder, m: int) -> list[list[int]]:
    P = []
    for i in range(1, m + 1):
        ids = [bld.add(f"P[{i},{t}]") for t in range(1, 5)]
        bld.clique(ids)
        P.append(ids)
    return P


def _add_element_cycles(bld: _Builder, n: int, m: int) -> list[list[int]]:
    Q = []
    for j in range(1, n + 1):
        ids = [bld.add(f"Q[{j},{i}]") for i in range(1, m + 1)]
        for i in range(m):
            bld.edges.append((ids[i], ids[(i + 1) % m]))
        Q.append(ids)
    return Q


def setcover_to_tmcv(inst: SetCoverInstance) -> ReductionOutput:
    """Set Cover -> TMCV with 4-cliques per set and per element, and an
    m-cycle per element whose i-th vertex hangs off set i's hub or the
    element's own clique."""
    m, n = inst.m, inst.n
    if m < 3:
        raise ValueError("need at least 3 sets so that element cycles have length >= 3")
    bld = _Builder()
    P = _add_set_cliques(bld, m)
    Q = _add_element_cycles(bld, n, m)
    R = []
    for j in range(1, n + 1):
        ids = [bld.add(f"R[{j},{t}]") for t in range(1, 5)]
        bld.clique(ids)
        R.append(ids)
    for i, s in enumerate(inst.sets):
        for j in range(n):
            if j + 1 in s:
                bld.edges.append((P[i][0], Q[j][i]))
            else:
                bld.edges.append((Q[j][i], R[j][0]))
    # a cover never needs more than m sets
    b = min(inst.r, m)
    return ReductionOutput(bld.build(), tuple(p[0] for p in P), b, 3 * b + m * n, tuple(bld.roles))


def exactcover_to_tmcv(inst: SetCoverInstance) -> ReductionOutput:
    """Bounded-degree variant: each element gets an edge Q_{j,1}-Q_{j,2}, one
    endpoint per set containing it, both tied to the element clique's R_{j,1}.
    Maximum degree is 6 (a hub: 3 in its clique + 3 elements)."""
    if not inst.is_exact_cover_shape():
        raise ValueError("exact-cover shape needs |S_i| = 3 and every element in exactly 2 sets")
    m, n = inst.m, inst.n
    bld = _Builder()
    P = _add_set_cliques(bld, m)
    Q = [[bld.add(f"Q[{j},{t}]") for t in (1, 2)] for j in range(1, n + 1)]
    R = []
    for j in range(1, n + 1):
        ids = [bld.add(f"R[{j},{t}]") for t in range(1, 5)]
        bld.clique(ids)
        R.append(ids)
    slot = [0] * n
    for i, s in enumerate(inst.sets):
        for u in sorted(s):
            j = u - 1
            bld.edges.append((P[i][0], Q[j][slot[j]]))
            slot[j] += 1
    for j in range(n):
        bld.edges += [(Q[j][0], Q[j][1]), (Q[j][0], R[j][0]), (Q[j][1], R[j][0])]
    b = min(inst.r, m)
    return ReductionOutput(bld.build(), tuple(p[0] for p in P), b, 3 * b + 2 * n, tuple(bld.roles))


def _degree3_gadget(bld: _Builder, t: int) -> tuple[int, int]:
    # prism: two t/2-cycles joined by a perfect matching, minus the rail edge
    # between the two attachment vertices, so that with the hub attached
    # every gadget vertex has degree exactly 3
    h = t // 2
    a = [bld.add(f"T[{k}]") for k in range(h)]
    c = [bld.add(f"T[{h + k}]") for k in range(h)]
    for k in range(h):
        if k != 0:
            bld.edges.append((a[k], a[(k + 1) % h]))
        bld.edges.append((c[k], c[(k + 1) % h]))
        bld.edges.append((a[k], c[k]))
    return a[0], a[1]


def inapprox_gadget_to_tmcv(inst: SetCoverInstance, t: int = 6) -> ReductionOutput:
    """Gap construction: element cycles feed a single hub R that props up a
    gadget of t degree-3 vertices. Covering every element drops R and then
    the whole gadget out of the 3-core; otherwise R and the gadget stay."""
    m, n = inst.m, inst.n
    if m < 3:
        raise ValueError("need at least 3 sets so that element cycles have length >= 3")
    if t < 6 or t % 2:
        raise ValueError("gadget size t must be even and at least 6")
    if all(len(s) == n for s in inst.sets):
        raise GraphError("every set is the whole universe: the hub would start outside the 3-core")
    bld = _Builder()
    P = _add_set_cliques(bld, m)
    Q = _add_element_cycles(bld, n, m)
    hub = bld.add("R")
    for i, s in enumerate(inst.sets):
        for j in range(n):
            if j + 1 in s:
                bld.edges.append((P[i][0], Q[j][i]))
            else:
                bld.edges.append((Q[j][i], hub))
    x, y = _degree3_gadget(bld, t)
    bld.edges += [(hub, x), (hub, y)]
    b = min(inst.r, m)
    return ReductionOutput(bld.build(), tuple(p[0] for p in P), b, 3 * b + m * n + 1 + t, tuple(bld.roles))


CONSTRUCTIONS = {
    "w2": setcover_to_tmcv,
    "exactcover": exactcover_to_tmcv,
    "inapprox": inapprox_gadget_to_tmcv,
}
