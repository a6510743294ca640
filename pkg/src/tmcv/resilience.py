"""Resilience curves over growing deletion sets, and Pearson correlation."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .core import core_decompose
from .graph import Graph, connected_components
from .heuristics import ahdr_steps, deletion_trace, hdr_ranking


@dataclass(frozen=True)
class ResilienceCurve:
    alphas: tuple[float, ...]
    values: tuple[float, ...]
    auc: float
    metric: str = ""

    @property
    def score(self) -> float:
        return 1.0 - self.auc

    def to_csv(self) -> str:
        rows = ["alpha,value\n"]
        rows += [f"{a:.6g},{v:.10g}\n" for a, v in zip(self.alphas, self.values)]
        return "".join(rows)


def _grid(grid_points: int) -> list[float]:
    if grid_points < 2:
        raise ValueError("grid_points must be at least 2")
    return [i / (grid_points - 1) for i in range(grid_points)]


def _prefix_sizes(n: int, grid_points: int) -> list[int]:
    # floor(alpha * n) in exact integer arithmetic
    return [(i * n) // (grid_points - 1) for i in range(grid_points)]


def trapezoid(alphas, values) -> float:
    return math.fsum(
        (alphas[i + 1] - alphas[i]) * (values[i] + values[i + 1]) / 2
        for i in range(len(alphas) - 1)
    )


def fragmentation_entropy(g: Graph, raw: bool = False) -> float:
    """Normalized entropy of the component size distribution of the live graph.

    0 for a connected graph, 1 when every vertex is alone. ``raw=True``
    returns the un-negated sum (1/ln n) sum p_k ln p_k, which is <= 0.
    """
    n = g.live_count
    if n <= 1:
        return 0.0
    comps = connected_components(g)
    if len(comps) == 1:
        return 0.0
    s = math.fsum((len(c) / n) * math.log(len(c) / n) for c in comps)
    h = s / math.log(n)
    return h if raw else -h


def _entropy_from_sizes(sizes: list[int], n: int) -> float:
    if n <= 1:
        return 1.0
    if len(sizes) == 1:
        return 0.0
    s = math.fsum((c / n) * math.log(c / n) for c in sizes)
    return min(1.0, max(0.0, -s / math.log(n)))


def _random_trial_values(g: Graph, ks: list[int], rng: random.Random) -> list[float]:
    # Add vertices back in reverse deletion order with union-find, reading
    # the component sizes whenever the live count hits a grid point.
    live = g.live_vertices()
    n = len(live)
    order = live[:]
    rng.shuffle(order)
    parent = {}
    size = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    wanted: dict[int, list[int]] = {}
    for idx, k in enumerate(ks):
        wanted.setdefault(n - k, []).append(idx)
    out = [0.0] * len(ks)

    def record(alive):
        if alive in wanted:
            sizes = [size[r] for r in size]
            # prefixes with at most one survivor count as fully fragmented
            h = 1.0 if alive <= 1 else _entropy_from_sizes(sizes, alive)
            for idx in wanted[alive]:
                out[idx] = h

    record(0)
    for step, v in enumerate(reversed(order), start=1):
        parent[v] = v
        size[v] = 1
        for w in g.adjacency[v]:
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    if size[rv] < size[rw]:
                        rv, rw = rw, rv
                    parent[rw] = rv
                    size[rv] += size.pop(rw)
        record(step)
    return out


def resilience_rand(g: Graph, trials: int = 10, grid_points: int = 101, seed: int = 0) -> ResilienceCurve:
    """Fragmentation under uniformly random deletion of floor(alpha*n) vertices.

    Each trial uses one random permutation; its prefixes are uniform subsets
    of every size. Trial seeds are derived from ``seed`` and the trial index.
    """
    alphas = _grid(grid_points)
    ks = _prefix_sizes(g.live_count, grid_points)
    per_trial = [
        _random_trial_values(g, ks, random.Random(f"{seed}/{t}")) for t in range(trials)
    ]
    values = [math.fsum(col) / trials for col in zip(*per_trial)] if trials else [0.0] * len(ks)
    values[-1] = 1.0
    return ResilienceCurve(tuple(alphas), tuple(values), trapezoid(alphas, values), "rand")


def attack_order(g: Graph, method: str = "ahdr", seed: int = 0, base=None) -> list[int]:
    """A full-length deletion order over all live vertices for the given method."""
    live = g.live_vertices()
    if method == "ahdr":
        return [v for v, _, _ in ahdr_steps(g, live, len(live), base)]
    if method == "hdr":
        return [v for v, _ in hdr_ranking(g, live, base)]
    if method == "hd":
        return sorted(live, key=lambda v: (-g.degree(v), v))
    if method == "random":
        order = live[:]
        random.Random(seed).shuffle(order)
        return order
    raise ValueError(f"unknown method {method!r}")


def resilience_core(g: Graph, grid_points: int = 101, method: str = "ahdr", seed: int = 0,
                    base=None) -> ResilienceCurve:
    """Disruption F(B_alpha) along the prefixes of one attack order."""
    if base is None:
        base = core_decompose(g)
    n = g.live_count
    alphas = _grid(grid_points)
    order = attack_order(g, method, seed, base)
    f_cum = [0] + [f for _, _, f in deletion_trace(g, order, base)]
    values = [f_cum[k] / n if n else 0.0 for k in _prefix_sizes(n, grid_points)]
    return ResilienceCurve(tuple(alphas), tuple(values), trapezoid(alphas, values), "core")


# --- correlation ------------------------------------------------------------

def _betacf(a: float, b: float, x: float, tol: float, max_iter: int = 500) -> float:
    # continued fraction for the incomplete beta, modified Lentz
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        d = tiny if abs(d) < tiny else d
        c = 1.0 + aa / c
        c = tiny if abs(c) < tiny else c
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        d = tiny if abs(d) < tiny else d
        c = 1.0 + aa / c
        c = tiny if abs(c) < tiny else c
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < tol:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def betainc(a: float, b: float, x: float, tol: float = 1e-10) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if x == 0.0 or x == 1.0:
        return x
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x, tol) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x, tol) / b


def pearson(x, y) -> tuple[float, float]:
    """Sample Pearson r and its two-sided p-value (Student t, N-2 dof)."""
    if len(x) != len(y):
        raise ValueError("x and y must have the same length")
    N = len(x)
    if N < 3:
        raise ValueError("need at least 3 points")
    mx = math.fsum(x) / N
    my = math.fsum(y) / N
    dx = [a - mx for a in x]
    dy = [b - my for b in y]
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("zero variance: correlation is undefined")
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    r = sxy / math.sqrt(sxx * syy)
    r = max(-1.0, min(1.0, r))
    dof = N - 2
    if abs(r) == 1.0:
        return r, 0.0
    t2 = r * r * dof / (1.0 - r * r)
    p = betainc(dof / 2.0, 0.5, dof / (dof + t2))
    return r, p
