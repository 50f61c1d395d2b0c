"""Independent ground-truth generators for validating the solvers.

These are intentionally naive: exhaustive enumeration over small instances
plus the classical greedy Huffman merge.  They share only the cost evaluator
in :mod:`prefixcodes.core` with the dynamic-programming solvers, never any DP
code, so agreement between the two is a meaningful check.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product

from .core import ChoiceLevelSpec, LeafSequence, LevelSpec, WeightSeq, cost_of_leaf_sequence
from .errors import BudgetExceeded, InvalidInput, NoFeasibleTree


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps that keep exhaustive enumeration from running unbounded."""

    max_n: int = 8
    max_depth: int = 5
    max_option_sets: int = 3


def enumerate_gmr(
    w: WeightSeq,
    spec: LevelSpec,
    max_level: int,
    budget: OracleBudget | None = None,
) -> int:
    """Minimum cost over every realizable leaf sequence with exactly n leaves.

    Depth-first search over per-level leaf counts.  The available-slot count
    is capped at the number of weights still unplaced; that never excludes an
    optimal sequence (spare capacity beyond the remaining need is never
    binding, since arities are >= 2) and keeps the state space finite.
    """
    budget = budget or OracleBudget()
    n = w.n
    if n > budget.max_n:
        raise BudgetExceeded(f"n={n} exceeds oracle budget {budget.max_n}")
    if max_level > budget.max_depth:
        raise BudgetExceeded(f"max_level={max_level} exceeds oracle budget {budget.max_depth}")
    if spec.num_levels < max_level:
        raise InvalidInput("level spec does not cover max_level")

    best: list[int | None] = [None]
    counts: dict[int, int] = {}

    def dfs(level: int, avail: int, placed: int) -> None:
        if placed == n:
            cost = cost_of_leaf_sequence(LeafSequence(counts), w, spec)
            if best[0] is None or cost < best[0]:
                best[0] = cost
            return
        if level > max_level:
            return
        need = n - placed
        for x in range(min(avail, need) + 1):
            if x:
                counts[level] = x
            if level < max_level:
                nxt = min((avail - x) * spec.arity(level + 1), need - x)
                dfs(level + 1, nxt, placed + x)
            elif x == need:
                dfs(level + 1, 0, n)
            if x:
                del counts[level]

    dfs(1, min(spec.arity(1), n), 0)
    if best[0] is None:
        raise NoFeasibleTree(f"no tree with {n} leaves fits within {max_level} levels")
    return best[0]


def enumerate_one_ended(
    w: WeightSeq,
    max_depth: int | None = None,
    budget: OracleBudget | None = None,
) -> int:
    """Minimum cost over all binary trees whose weighted leaves are 1-children.

    Enumerates full binary tree shapes level by level: at each level, choose
    how many of the available 1-children become weighted leaves and how many
    nodes are expanded further.  Subtrees that could never receive a weighted
    leaf are skipped -- dropping them never changes the cost.  Weights are
    assigned shallowest-first.
    """
    budget = budget or OracleBudget(max_n=6, max_depth=8)
    n = w.n
    if n > budget.max_n:
        raise BudgetExceeded(f"n={n} exceeds oracle budget {budget.max_n}")
    if max_depth is None:
        max_depth = n + 2
    if max_depth > budget.max_depth:
        raise BudgetExceeded(f"max_depth={max_depth} exceeds oracle budget {budget.max_depth}")

    best: list[int | None] = [None]

    def dfs(level: int, internals: int, placed: int, cost: int) -> None:
        if level > max_depth:
            return
        # `internals` parents each contribute one 0-node and one 1-node here.
        for goods in range(min(internals, n - placed) + 1):
            add = level * (w.suffix[placed] - w.suffix[placed + goods])
            now = placed + goods
            if now == n:
                total = cost + add
                if best[0] is None or total < best[0]:
                    best[0] = total
                continue
            # every expanded node must eventually host a weighted leaf
            max_expand = min(2 * internals - goods, n - now)
            for expand in range(1, max_expand + 1):
                dfs(level + 1, expand, now, cost + add)

    dfs(1, 1, 0, 0)
    if best[0] is None:
        raise NoFeasibleTree("no one-ended tree within the depth limit")
    return best[0]


def huffman_greedy(w: WeightSeq, r: int) -> int:
    """Classical r-ary greedy merge; returns the weighted external path length.

    Zero-weight dummies pad the input so that ``(n - 1) % (r - 1) == 0``.  A
    single weight is a deliberate special case: this package always spends one
    edge on it (cost ``p_1``) rather than emitting an empty codeword.
    """
    if r < 2:
        raise InvalidInput("alphabet size must be >= 2")
    n = w.n
    if n == 1:
        return w.weights[0]
    heap = list(w.weights)
    pad = (r - 1 - (n - 1) % (r - 1)) % (r - 1)
    heap.extend([0] * pad)
    heapq.heapify(heap)
    cost = 0
    while len(heap) > 1:
        merged = 0
        for _ in range(r):
            merged += heapq.heappop(heap)
        cost += merged
        heapq.heappush(heap, merged)
    return cost


def enumerate_choice(
    w: WeightSeq,
    cspec: ChoiceLevelSpec,
    max_level: int,
    budget: OracleBudget | None = None,
) -> int:
    """Outer product over per-level option assignments, each fed to enumerate_gmr."""
    budget = budget or OracleBudget()
    if cspec.num_levels < max_level:
        raise InvalidInput("choice spec does not cover max_level")
    option_sets = [cspec.options(i) for i in range(1, max_level + 1)]
    for opts in option_sets:
        if len(opts) > budget.max_option_sets:
            raise BudgetExceeded("option set larger than oracle budget")
    best = None
    for assignment in product(*option_sets):
        try:
            cost = enumerate_gmr(w, LevelSpec(assignment), max_level, budget)
        except NoFeasibleTree:
            continue
        if best is None or cost < best:
            best = cost
    if best is None:
        raise NoFeasibleTree("no option assignment admits a feasible tree")
    return best
