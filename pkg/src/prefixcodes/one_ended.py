"""Minimum-cost binary prefix-free codes whose words all end in "1".

Only 1-children may carry weights.  The DP state ``(m, b)`` counts weighted
("good") 1-leaves placed so far and "bad" bottom-level nodes -- 0-nodes plus
unweighted 1-nodes -- that expansion would turn internal.  Unlike the
mixed-radix program the table is level-free: a state's cost does not depend
on which level it was reached at beyond what the partial cost already
charges, and every predecessor is lexicographically smaller, so one table
serves all levels.

The batched fill processes states in diagonals ``d = m + b``.  Within one
diagonal the candidate value gamma(b') depends only on the predecessor's bad
count, and a state's predecessors form the window ceil(b/2) <= b' <= b, so a
range-minimum index over gamma answers each state in O(1).  Ties resolve to
the smallest b', matching the naive scan order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import UNREACHABLE, CodeBook, WeightSeq, check_prefix_free
from .errors import InternalInconsistency, InvalidInput, NoFeasibleTree
from .rmq import RMQIndex

Sig = tuple[int, int]


@dataclass(frozen=True)
class OneEndedTable:
    costs: dict[Sig, int]
    preds: dict[Sig, Sig | None]


@dataclass(frozen=True)
class OneEndedResult:
    cost: int
    codebook: CodeBook | None
    expansions: tuple[Sig, ...]
    table: OneEndedTable
    cells_updated: int


def oe_predecessors(sig: Sig, n: int) -> list[Sig]:
    """Valid states that expand to ``sig``: m = m' + 2b' - b with b/2 <= b' <= b.

    Ascending b' order; every predecessor is lexicographically smaller than
    ``sig`` (m' < m, or m' = m with b = 2b').
    """
    m, b = sig
    if not (0 <= m <= n and 1 <= b <= 2 * n - 1):
        raise InvalidInput(f"({m}, {b}) is not a valid signature for n={n}")
    d = m + b
    out = []
    for bp in range(max(1, (b + 1) // 2), min(b, d // 2) + 1):
        mp = d - 2 * bp
        if mp <= n and bp <= 2 * n - 1:
            out.append((mp, bp))
    return out


def _fill_naive(w: WeightSeq):
    n = w.n
    INF = UNREACHABLE
    costs: dict[Sig, int] = {(0, 1): 0}
    preds: dict[Sig, Sig | None] = {(0, 1): None}
    get = costs.get
    suffix = w.suffix
    cells = 0
    for m in range(n + 1):
        for b in range(1, 2 * n):
            if m == 0 and b == 1:
                continue
            d = m + b
            best = INF
            arg = None
            for bp in range(max(1, (b + 1) // 2), min(b, d // 2) + 1):
                mp = d - 2 * bp  # mp <= m <= n always (2*bp >= b)
                v = get((mp, bp), INF) + suffix[mp]
                cells += 1
                if v < best:  # strict: the smaller b' wins ties
                    best = v
                    arg = (mp, bp)
            if best < INF:
                costs[(m, b)] = best
                preds[(m, b)] = arg
    return costs, preds, cells


def _fill_batched(w: WeightSeq):
    n = w.n
    INF = UNREACHABLE
    costs: dict[Sig, int] = {(0, 1): 0}
    preds: dict[Sig, Sig | None] = {(0, 1): None}
    get = costs.get
    wext = list(w.suffix) + [0] * (2 * n)  # indices up to 3n
    cells = 0
    for d in range(2, 3 * n):
        half = d // 2
        cand = [get((d - 2 * bp, bp), INF) + wext[d - 2 * bp] for bp in range(1, half + 1)]
        cells += half
        if not cand:
            continue
        idx = RMQIndex(cand)
        cells += idx.build_ops
        for b in range(max(1, d - n), min(2 * n - 1, d) + 1):
            m = d - b
            lo = max(1, (b + 1) // 2)
            hi = min(b, half)
            if lo > hi:
                continue
            k = idx.query(lo - 1, hi - 1)
            cells += 1
            v = cand[k]
            if v < INF:
                costs[(m, b)] = v
                preds[(m, b)] = (d - 2 * (k + 1), k + 1)
    return costs, preds, cells


def _codewords_from_expansions(expansions, w: WeightSeq) -> CodeBook:
    """Rebuild the tree deterministically and emit the weighted 1-leaf words.

    Bad nodes are kept in left-to-right order; each spawns a 0-child then a
    1-child, and the first ``m_i - m_{i-1}`` 1-children of a level become the
    next weighted leaves, realizing the shallowest-first weight order.
    """
    words: list[tuple[int, ...]] = []
    bad: list[tuple[int, ...]] = [()]
    for step in range(1, len(expansions)):
        goods = expansions[step][0] - expansions[step - 1][0]
        ones = [p + (1,) for p in bad]
        words.extend(ones[:goods])
        taken = set(range(goods))
        nxt = []
        for k, p in enumerate(bad):
            nxt.append(p + (0,))
            if k not in taken:
                nxt.append(p + (1,))
        if len(nxt) != expansions[step][1]:
            raise InternalInconsistency("bad-node count diverged from the signature chain")
        bad = nxt
    cost = sum(len(word) * w.weight(t + 1) for t, word in enumerate(words))
    return CodeBook(words=tuple(words), lengths=tuple(len(word) for word in words), cost=cost)


def _solve(w: WeightSeq, mode: str, with_code: bool) -> OneEndedResult:
    n = w.n
    if n < 1:
        raise InvalidInput("need at least one weight")
    costs, preds, cells = _fill_naive(w) if mode == "naive" else _fill_batched(w)
    best = None
    for b in range(1, max(1, 2 * n - 2) + 1):
        v = costs.get((n, b))
        if v is not None:
            cand = (v, b)
            if best is None or cand < best:
                best = cand
    if best is None:
        raise NoFeasibleTree("no one-ended tree reaches all weights")
    cost, b_final = best
    sig: Sig = (n, b_final)
    chain = [sig]
    while sig != (0, 1):
        nxt = preds.get(sig)
        if nxt is None:
            raise InternalInconsistency(f"broken predecessor chain at {sig}")
        sig = nxt
        chain.append(sig)
    chain.reverse()
    expansions = tuple(chain)
    codebook = None
    if with_code:
        codebook = _codewords_from_expansions(expansions, w)
        if codebook.cost != cost or not check_prefix_free(codebook.words):
            raise InternalInconsistency("reconstructed code disagrees with the DP answer")
    return OneEndedResult(
        cost=cost,
        codebook=codebook,
        expansions=expansions,
        table=OneEndedTable(costs, preds),
        cells_updated=cells,
    )


def solve_one_ended(w: WeightSeq, *, algorithm: str = "batched",
                    with_code: bool = True) -> OneEndedResult:
    """RMQ-batched solver (or naive via ``algorithm="naive"``)."""
    if algorithm not in ("batched", "naive"):
        raise InvalidInput(f"unknown algorithm {algorithm!r}")
    return _solve(w, algorithm, with_code)


def solve_one_ended_naive(w: WeightSeq, *, with_code: bool = True) -> OneEndedResult:
    """Direct minimization over predecessors in lexicographic state order."""
    return _solve(w, "naive", with_code)
