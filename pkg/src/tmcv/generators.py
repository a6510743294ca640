"""Seeded synthetic graphs: Erdos-Renyi G(n, M) and Barabasi-Albert."""
from __future__ import annotations

import hashlib
import random
from math import comb, isqrt

from .errors import GraphError
from .graph import Graph


def derive_seed(master: int, *keys) -> int:
    """Stable 63-bit seed from a master seed and any keys (order matters)."""
    text = "/".join([str(master)] + [str(k) for k in keys])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big") >> 1


def _pair(n: int, k: int) -> tuple[int, int]:
    # k-th pair (u, v), u < v, in lexicographic order
    total = n * (n - 1) // 2
    rem = total - 1 - k  # index counted from the end
    r = (isqrt(8 * rem + 1) - 1) // 2  # largest r with r(r+1)/2 <= rem
    u = n - 2 - r
    row_start = total - (r + 1) * (r + 2) // 2
    v = u + 1 + (k - row_start)
    return u, v


def erdos_renyi(n: int, avg_degree: float, seed: int) -> Graph:
    """Uniform simple graph on n vertices with exactly round(n*avg_degree/2) edges."""
    if n < 2:
        raise GraphError("n must be at least 2")
    M = round(n * avg_degree / 2)
    total = comb(n, 2)
    if M > total:
        raise GraphError(f"{M} edges do not fit in a simple graph on {n} vertices")
    picks = random.Random(seed).sample(range(total), M)
    return Graph.from_edges(n, (_pair(n, k) for k in picks))


def barabasi_albert(n: int, attach_m: int, seed: int) -> Graph:
    """Preferential attachment grown from a clique on attach_m + 1 vertices.

    Each new vertex links to attach_m distinct earlier vertices chosen with
    probability proportional to degree (sampling uniformly from the list of
    edge endpoints).
    """
    if attach_m < 1:
        raise GraphError("attach_m must be at least 1")
    if n <= attach_m:
        raise GraphError("n must exceed attach_m")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(attach_m + 1) for v in range(u + 1, attach_m + 1)]
    endpoints = [x for e in edges for x in e]
    for v in range(attach_m + 1, n):
        targets: set[int] = set()
        while len(targets) < attach_m:
            targets.add(endpoints[rng.randrange(len(endpoints))])
        for u in sorted(targets):
            edges.append((u, v))
            endpoints += (u, v)
    return Graph.from_edges(n, edges)


def generate(model: str, n: int, deg: float, seed: int) -> Graph:
    """Dispatch by model name; for ``ba`` the degree is a target average degree."""
    if model == "er":
        return erdos_renyi(n, deg, seed)
    if model == "ba":
        return barabasi_albert(n, max(1, round(deg / 2)), seed)
    raise ValueError(f"unknown model {model!r}")
