"""Exact solvers: subset enumeration over the candidates, and a tree DP for forests."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import _peel, core_decompose
from .errors import BudgetError, InfeasibleError
from .graph import Graph
from .heuristics import resolve_candidates
from .objective import AttackResult, evaluate

BRUTE_FORCE_CAP = 20

NEG = float("-inf")


def _f_after(adj, n, before, removed, B) -> int:
    # full recomputation on an adjacency with B cut out
    gone = removed | B
    sub = [() if u in gone else [w for w in nbrs if w not in gone] for u, nbrs in enumerate(adj)]
    after = _peel(sub, n)
    return sum(1 for v in range(n) if v not in gone and after[v] < before[v])


def exact_bruteforce(g: Graph, candidates, b: int, base=None, cap: int = BRUTE_FORCE_CAP) -> AttackResult:
    """Best B over all subsets of the candidates with |B| <= b.

    Subsets are visited by size, then lexicographically; the first maximizer
    found wins, so the answer is the smallest-then-lex-first optimum.
    """
    cands = resolve_candidates(g, candidates)
    if len(cands) > cap:
        raise InfeasibleError(
            f"{len(cands)} candidates exceed the brute-force cap of {cap}; "
            "use a heuristic (e.g. ahdr) or shrink the candidate set"
        )
    if b < 0:
        raise BudgetError("budget must be non-negative")
    if base is None:
        base = core_decompose(g)
    adj, n, before, removed = g.adjacency, g.n, base.coreness, g.removed
    best_f, best_B = 0, ()
    for size in range(1, min(b, len(cands)) + 1):
        for B in combinations(cands, size):
            f = _f_after(adj, n, before, removed, frozenset(B))
            if f > best_f:
                best_f, best_B = f, B
    res = evaluate(g, base, best_B, method="brute")
    res.optimal = True
    return res


# --- forest dynamic program -------------------------------------------------

def _conv(r1, r2):
    # (max, +) convolution for "at most l deletions" rows of equal length
    out = [NEG] * len(r1)
    for a, x in enumerate(r1):
        if x == NEG:
            continue
        for c in range(len(r1) - a):
            y = r2[c]
            if y != NEG and x + y > out[a + c]:
                out[a + c] = x + y
    return out


def _vmax(*rows):
    return [max(vals) for vals in zip(*rows)]


def _find_split(prev, row, target, l):
    # budget a for the prefix such that prev[a] + row[l - a] == target
    for a in range(l + 1):
        if prev[a] != NEG and row[l - a] != NEG and prev[a] + row[l - a] == target:
            return a
    return None


def _split(prev, row, target, l):
    a = _find_split(prev, row, target, l)
    if a is None:
        raise AssertionError("inconsistent DP tables")
    return a


@dataclass
class _Node:
    children: list
    in_gamma: bool
    A: list = None
    B: list = None
    C: list = None
    # prefix knapsack rows, index k = after the first k children
    acc_c: list = None   # sum of children's C rows (x kept, every child deleted)
    acc_d: list = None   # sum of children's D rows (x deleted)
    some: list = None    # x kept, at least one child kept

    @property
    def D(self):
        return _vmax(self.A, self.B, self.C)


def _solve_tree(nodes, order, b):
    """Fill the A/B/C tables bottom-up. ``order`` lists a tree's vertices parent-first."""
    zero = [0] * (b + 1)
    for x in reversed(order):
        nd = nodes[x]
        acc_c, acc_d = [zero], [zero]
        some = [[NEG] * (b + 1)]
        for y in nd.children:
            ch = nodes[y]
            kept = _vmax([a - 1 for a in ch.A], ch.B)   # y survives next to a surviving x
            anyr = _vmax(kept, ch.C)
            some.append(_vmax(_conv(some[-1], anyr), _conv(acc_c[-1], kept)))
            acc_c.append(_conv(acc_c[-1], ch.C))
            acc_d.append(_conv(acc_d[-1], ch.D))
        nd.acc_c, nd.acc_d, nd.some = acc_c, acc_d, some
        # x isolated within its subtree; +1 counts x itself (undone by a kept parent)
        nd.A = [v + 1 for v in acc_c[-1]]
        nd.B = some[-1]
        if nd.in_gamma:
            nd.C = [NEG] + acc_d[-1][:b]
        else:
            nd.C = [NEG] * (b + 1)


def _pick_state(nd, l, kept_parent):
    # which state realizes the child's row entry chosen by the parent
    if kept_parent:
        target = max(nd.A[l] - 1, nd.B[l], nd.C[l]) if kept_parent == "any" else max(nd.A[l] - 1, nd.B[l])
        if nd.A[l] - 1 == target:
            return "A"
        if nd.B[l] == target:
            return "B"
        return "C"
    target = max(nd.A[l], nd.B[l], nd.C[l])
    for s, row in (("A", nd.A), ("B", nd.B), ("C", nd.C)):
        if row[l] == target:
            return s
    raise AssertionError("no state realizes the target")


def _reconstruct(nodes, root, state, l, out):
    stack = [(root, state, l)]
    while stack:
        x, st, l = stack.pop()
        nd = nodes[x]
        ch = nd.children
        if st == "A":
            target = nd.acc_c[-1][l]
            for k in range(len(ch), 0, -1):
                y = nodes[ch[k - 1]]
                a = _split(nd.acc_c[k - 1], y.C, target, l)
                stack.append((ch[k - 1], "C", l - a))
                target, l = nd.acc_c[k - 1][a], a
        elif st == "C":
            out.append(x)
            l -= 1
            target = nd.acc_d[-1][l]
            for k in range(len(ch), 0, -1):
                y = nodes[ch[k - 1]]
                a = _split(nd.acc_d[k - 1], y.D, target, l)
                stack.append((ch[k - 1], _pick_state(y, l - a, None), l - a))
                target, l = nd.acc_d[k - 1][a], a
        else:  # "B"
            target = nd.some[-1][l]
            have_kept = True  # still in the "at least one kept child" track
            for k in range(len(ch), 0, -1):
                y = nodes[ch[k - 1]]
                if have_kept:
                    kept = _vmax([a - 1 for a in y.A], y.B)
                    anyr = _vmax(kept, y.C)
                    a = _find_split(nd.some[k - 1], anyr, target, l)
                    if a is not None:
                        stack.append((ch[k - 1], _pick_state(y, l - a, "any"), l - a))
                        target, l = nd.some[k - 1][a], a
                    else:
                        # y is the kept child; all earlier children are deleted
                        a = _split(nd.acc_c[k - 1], kept, target, l)
                        stack.append((ch[k - 1], _pick_state(y, l - a, "kept"), l - a))
                        target, l = nd.acc_c[k - 1][a], a
                        have_kept = False
                else:
                    a = _split(nd.acc_c[k - 1], y.C, target, l)
                    stack.append((ch[k - 1], "C", l - a))
                    target, l = nd.acc_c[k - 1][a], a


def exact_forest_dp(g: Graph, candidates, b: int, base=None) -> AttackResult:
    """Optimal deletion set on a forest (degeneracy <= 1) by dynamic programming.

    In a forest every vertex with an edge has coreness 1, so a survivor is
    affected exactly when it ends up isolated. Per rooted tree and budget l:
    A = x kept with all children deleted, B = x kept next to a kept child,
    C = x deleted; values count vertices of the subtree that end isolated.
    """
    if base is None:
        base = core_decompose(g)
    if base.degeneracy > 1:
        raise InfeasibleError("degeneracy > 1: the forest DP needs a forest")
    if b < 0:
        raise BudgetError("budget must be non-negative")
    gamma = set(resolve_candidates(g, candidates))
    b = min(b, len(gamma))
    adj = g.adjacency

    nodes: dict[int, _Node] = {}
    roots = []
    seen = set(g.removed)
    for r in range(g.n):
        if r in seen or not adj[r]:
            # isolated vertices are never affected; deleting them gains nothing
            seen.add(r)
            continue
        order = [r]
        seen.add(r)
        nodes[r] = _Node([], r in gamma)
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    nodes[y] = _Node([], y in gamma)
                    nodes[x].children.append(y)
                    order.append(y)
        _solve_tree(nodes, order, b)
        roots.append(r)

    total = [[0] * (b + 1)]
    for r in roots:
        total.append(_conv(total[-1], nodes[r].D))
    l = b
    target = total[-1][l]
    B: list[int] = []
    for k in range(len(roots), 0, -1):
        nd = nodes[roots[k - 1]]
        a = _split(total[k - 1], nd.D, target, l)
        _reconstruct(nodes, roots[k - 1], _pick_state(nd, l - a, None), l - a, B)
        target, l = total[k - 1][a], a

    res = evaluate(g, base, B, method="forest-dp")
    res.optimal = True
    if res.f != int(total[-1][b]):
        raise AssertionError(f"DP value {total[-1][b]} but reconstruction gives {res.f}")
    return res
