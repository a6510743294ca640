"""Selection heuristics for the deletion set: Random, HD, HDR and adaptive HDR.

Ties are always broken towards the lowest vertex id.
"""
from __future__ import annotations

import random
from typing import Iterable, Iterator

from .core import CoreDecomposition, DeletionTracker, core_decompose
from .errors import BudgetError, GraphError
from .graph import Graph
from .objective import AttackResult, evaluate


def resolve_candidates(g: Graph, candidates: Iterable[int] | None) -> list[int]:
    """Sorted candidate list; None means every live vertex."""
    if candidates is None:
        return g.live_vertices()
    cands = sorted(set(candidates))
    for v in cands:
        if not g.is_live(v):
            raise GraphError(f"candidate {v} is not a live vertex")
    return cands


def _check_budget(b: int, cands: list[int]) -> None:
    if b < 0:
        raise BudgetError("budget must be non-negative")
    if b > len(cands):
        raise BudgetError(f"budget {b} exceeds candidate set size {len(cands)}")


def select_random(g: Graph, candidates, b: int, seed: int, base=None) -> AttackResult:
    cands = resolve_candidates(g, candidates)
    _check_budget(b, cands)
    B = random.Random(seed).sample(cands, b)
    return evaluate(g, base, B, method="random")


def select_high_degree(g: Graph, candidates, b: int, base=None) -> AttackResult:
    cands = resolve_candidates(g, candidates)
    _check_budget(b, cands)
    ranked = sorted(cands, key=lambda v: (-g.degree(v), v))
    return evaluate(g, base, ranked[:b], method="hd")


def node_strength(g: Graph, base: CoreDecomposition | None, v: int) -> int:
    """f({v}): how many vertices lose coreness when v alone is deleted."""
    if not g.is_live(v):
        raise GraphError(f"vertex {v} is not live")
    return len(DeletionTracker(g, base).drops(v))


def hdr_ranking(g: Graph, candidates, base=None, prune: bool = True) -> list[tuple[int, int]]:
    """(vertex, strength) for every candidate, strongest first."""
    cands = resolve_candidates(g, candidates)
    tracker = DeletionTracker(g, base)
    scored = [(v, tracker.gain(v, prune=prune)) for v in cands]
    scored.sort(key=lambda t: (-t[1], t[0]))
    return scored


def select_hdr(g: Graph, candidates, b: int, base=None) -> AttackResult:
    cands = resolve_candidates(g, candidates)
    _check_budget(b, cands)
    if base is None:
        base = core_decompose(g)
    ranked = hdr_ranking(g, cands, base)
    return evaluate(g, base, [v for v, _ in ranked[:b]], method="hdr")


def ahdr_steps(g: Graph, candidates, steps: int, base=None,
               prune: bool = True) -> Iterator[tuple[int, int, int]]:
    """Run the adaptive greedy, yielding (vertex, delta_f, f_so_far) per round.

    Each round scores every remaining candidate by the exact change in f on
    the current residual graph and deletes the best one. Rounds where nothing
    gains still delete a vertex so that callers get a full-length sequence.
    """
    remaining = resolve_candidates(g, candidates)
    tracker = DeletionTracker(g, base)
    for _ in range(min(steps, len(remaining))):
        best_v, best = -1, None
        for v in remaining:
            s = tracker.gain(v, prune=prune)
            if best is None or s > best:
                best_v, best = v, s
        remaining.remove(best_v)
        delta = tracker.delete(best_v)
        yield best_v, delta, tracker.affected


def select_ahdr(g: Graph, candidates, b: int, base=None, prune: bool = True) -> AttackResult:
    cands = resolve_candidates(g, candidates)
    _check_budget(b, cands)
    if base is None:
        base = core_decompose(g)
    per_step = [(v, d) for v, d, _ in ahdr_steps(g, cands, b, base, prune=prune)]
    res = evaluate(g, base, [v for v, _ in per_step], method="ahdr")
    res.per_step = per_step
    return res


def deletion_trace(g: Graph, order: Iterable[int], base=None) -> list[tuple[int, int, int]]:
    """(vertex, delta_f, f_cum) after each deletion of ``order`` in turn."""
    tracker = DeletionTracker(g, base)
    out = []
    for v in order:
        d = tracker.delete(v)
        out.append((v, d, tracker.affected))
    return out


METHODS = ("random", "hd", "hdr", "ahdr")


def run_method(method: str, g: Graph, candidates, b: int, seed: int = 0, base=None) -> AttackResult:
    if method == "random":
        return select_random(g, candidates, b, seed, base=base)
    if method == "hd":
        return select_high_degree(g, candidates, b, base=base)
    if method == "hdr":
        return select_hdr(g, candidates, b, base=base)
    if method == "ahdr":
        return select_ahdr(g, candidates, b, base=base)
    raise ValueError(f"unknown method {method!r}")
