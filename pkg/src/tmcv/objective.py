"""The TMCV objective: which surviving vertices lose coreness after deleting B."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import CoreDecomposition, core_decompose
from .errors import BudgetError, GraphError
from .graph import Graph, delete_vertices


@dataclass
class AttackResult:
    B: tuple[int, ...]
    affected: tuple[int, ...]
    f: int
    F: float
    n: int
    method: str = ""
    optimal: bool = False
    # (vertex, change in f) per deletion, in deletion order
    per_step: list[tuple[int, int]] | None = field(default=None)

    def to_json(self, graph: Graph | None = None) -> dict:
        out = {"B": list(self.B), "f": self.f, "F": self.F, "affected": list(self.affected)}
        if self.method:
            out["method"] = self.method
        if self.optimal:
            out["optimal"] = True
        if self.per_step is not None:
            out["per_step"] = [[v, d] for v, d in self.per_step]
        if graph is not None and graph.labels is not None:
            out["B_labels"] = [graph.label(v) for v in self.B]
        return out


def _check_live(g: Graph, B: Iterable[int]) -> frozenset[int]:
    B = frozenset(B)
    for v in B:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        if v in g.removed:
            raise GraphError(f"vertex {v} is already removed")
    return B


def affected_set(g: Graph, base: CoreDecomposition | None, B: Iterable[int]) -> set[int]:
    """Vertices outside B whose coreness strictly drops once B is deleted.

    Always a full re-decomposition of the residual graph.
    """
    B = _check_live(g, B)
    if base is None:
        base = core_decompose(g)
    if not B:
        return set()
    after = core_decompose(delete_vertices(g, B)).coreness
    before = base.coreness
    rem = g.removed
    return {v for v in range(g.n) if v not in B and v not in rem and after[v] < before[v]}


def evaluate(g: Graph, base: CoreDecomposition | None, B: Iterable[int],
             budget: int | None = None, method: str = "") -> AttackResult:
    B = _check_live(g, B)
    if budget is not None and len(B) > budget:
        raise BudgetError(f"|B|={len(B)} exceeds budget {budget}")
    aff = affected_set(g, base, B)
    n = g.live_count
    f = len(aff)
    return AttackResult(tuple(sorted(B)), tuple(sorted(aff)), f, f / n if n else 0.0, n, method)
