"""Top-down dynamic program for generalized mixed-radix trees.

A truncated tree is summarized by a level signature ``(m, b)``: ``m`` leaves
labeled so far, ``b`` bottom-level nodes tagged for expansion.  Starting from
the root state ``(0, 1)``, each level-``i`` expansion turns every tagged node
into ``r_i`` children and charges ``c_i * W_m'`` -- one more edge length for
every still-unplaced weight.  The level tables map reachable valid signatures
to their minimum partial cost; absent entries mean UNREACHABLE.

Two fill strategies produce bit-identical tables:

* ``solve_naive`` minimizes over each entry's predecessors independently;
* ``solve_batched`` groups the entries of one level whose signatures share
  ``d = m + b``, precomputes the candidate value ``gamma(b')`` for each
  predecessor on that diagonal, and folds a running minimum while sweeping
  ``m`` upward, so a whole batch costs O(d).  Levels whose arity exceeds n
  are finished by checking the only two possible predecessors of each
  ``(m, 0)`` state.

Equal-cost predecessors resolve to the lexicographically smallest
``(m', b')`` (the largest ``b'`` on a diagonal), which keeps the two
strategies' backtraces identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    UNREACHABLE,
    CodeBook,
    LeafSequence,
    LevelSpec,
    WeightSeq,
    cost_of_leaf_sequence,
)
from .errors import (
    InsufficientLeaves,
    InternalInconsistency,
    InvalidInput,
    InvalidLeafSequence,
    NoFeasibleTree,
)

Sig = tuple[int, int]


@dataclass(frozen=True)
class LevelTable:
    """Reachable signatures of one level: exact cost and argmin predecessor."""

    level: int
    costs: dict[Sig, int]
    preds: dict[Sig, Sig | None] | None


@dataclass(frozen=True)
class DPResult:
    """Solver output.

    ``leaves_full`` is the leaf count of the winning full tree before the
    excess zero-weight leaves are pruned; ``leaf_sequence`` is pruned to
    exactly n leaves.  ``tables``, ``expansions`` and ``leaf_sequence`` are
    present only when the solver ran with ``keep_tables=True``.
    ``options`` records the chosen per-level option index for choice solves.
    """

    cost: int
    level: int
    leaves_full: int
    cells_updated: int
    expansions: tuple[Sig, ...] | None = None
    leaf_sequence: LeafSequence | None = None
    tables: tuple | None = None
    options: tuple[int, ...] | None = None


def valid_signature(m: int, b: int, *, n: int, arity: int) -> bool:
    """Validity of ``(m, b)`` on a level with the given arity."""
    if m < 0 or b < 0:
        return False
    if b > 0:
        return m + b <= n
    return max(n, arity) <= m <= n + arity - 1


def predecessors(i: int, sig: Sig, spec: LevelSpec, n: int) -> list[Sig]:
    """All valid level-(i-1) signatures that expand to ``sig`` at level ``i``.

    ``(m', b')`` qualifies when ``m = m' + b' * r_i - b`` with
    ``0 <= b <= b' * r_i``; returned in ascending ``(m', b')`` order.
    """
    m, b = sig
    r = spec.arity(i)
    if not valid_signature(m, b, n=n, arity=r):
        raise InvalidInput(f"({m}, {b}) is not a valid level-{i} signature")
    d = m + b
    out = []
    for bp in range((b + r - 1) // r, d // r + 1):
        mp = d - r * bp
        if i == 1:
            ok = (mp, bp) == (0, 1)
        elif bp > 0:
            ok = mp + bp <= n
        else:
            ok = valid_signature(mp, 0, n=n, arity=spec.arity(i - 1))
        if ok:
            out.append((mp, bp))
    out.sort()
    return out


def _argmin_suffix(cand: list, lo: int):
    """Min of cand[lo:] and the largest index attaining it (smallest m')."""
    window = cand[lo:]
    v = min(window)
    k = lo + len(window) - 1 - window[::-1].index(v)
    return v, k


def _fill_level(prev: dict, n: int, r: int, c: int, wext: list, mode: str, want_preds: bool):
    """Fill one level from the previous one.

    Returns ``(costs, preds, zeros, cells)`` where ``zeros`` lists the
    ``(m, cost)`` pairs of finished-tree states ``(m, 0)`` in ascending m and
    ``cells`` counts evaluated candidates (predecessor visits for the naive
    mode, gamma evaluations plus sweep steps for the batched mode).
    """
    costs: dict[Sig, int] = {}
    preds: dict[Sig, Sig | None] | None = {} if want_preds else None
    zeros: list[tuple[int, int]] = []
    cells = 0
    get = prev.get
    INF = UNREACHABLE

    if r > n:
        # No signature with b > 0 is reachable on such a level: a predecessor
        # would need m' + b' * r <= n with b' >= 1.  Only the (m, 0) states
        # remain, each with at most two candidates: itself one level up
        # (W_m = 0 there) and (m - r, 1).
        for m in range(r, r + n):
            v1 = get((m - r, 1), INF) + c * wext[m - r]
            v0 = get((m, 0), INF)
            cells += 2
            if v1 <= v0:
                v, pred = v1, (m - r, 1)
            else:
                v, pred = v0, (m, 0)
            if v < INF:
                costs[(m, 0)] = v
                zeros.append((m, v))
                if want_preds:
                    preds[(m, 0)] = pred
        return costs, preds, zeros, cells

    if mode == "batched":
        for d in range(1, n + 1):
            B = d // r
            t = d - r * B
            cand = [get((d - r * bp, bp), INF) + c * wext[d - r * bp] for bp in range(B + 1)]
            cells += (B + 1) + (d - t + 1)
            best = INF
            barg = -1
            for m in range(t, d + 1):
                rem = d - m
                if rem % r == 0:
                    v = cand[rem // r]
                    if v < best:  # strict: the earlier (larger) b' wins ties
                        best = v
                        barg = rem // r
                if best < INF:
                    if rem > 0:
                        costs[(m, rem)] = best
                        if want_preds:
                            preds[(m, rem)] = (d - r * barg, barg)
                    elif m == n:  # the only in-range (m, 0) state with d <= n
                        costs[(m, 0)] = best
                        zeros.append((m, best))
                        if want_preds:
                            preds[(m, 0)] = (d - r * barg, barg)
        for d in range(n + 1, n + r):
            # remaining finished-tree states; each is a full-window minimum
            B = d // r
            cand = [get((d - r * bp, bp), INF) + c * wext[d - r * bp] for bp in range(B + 1)]
            cells += 2 * (B + 1)
            v, k = _argmin_suffix(cand, 0)
            if v < INF:
                costs[(d, 0)] = v
                zeros.append((d, v))
                if want_preds:
                    preds[(d, 0)] = (d - r * k, k)
        return costs, preds, zeros, cells

    # naive: every entry scans its own predecessor window
    for d in range(2, n + 1):
        B = d // r
        cand = [get((d - r * bp, bp), INF) + c * wext[d - r * bp] for bp in range(B + 1)]
        for b in range(1, d + 1):
            lo = (b + r - 1) // r
            if lo > B:
                continue
            cells += B + 1 - lo
            v, k = _argmin_suffix(cand, lo)
            if v < INF:
                costs[(d - b, b)] = v
                if want_preds:
                    preds[(d - b, b)] = (d - r * k, k)
    for m in range(max(n, r), n + r):
        B = m // r
        cand = [get((m - r * bp, bp), INF) + c * wext[m - r * bp] for bp in range(B + 1)]
        cells += B + 1
        v, k = _argmin_suffix(cand, 0)
        if v < INF:
            costs[(m, 0)] = v
            zeros.append((m, v))
            if want_preds:
                preds[(m, 0)] = (m - r * k, k)
    return costs, preds, zeros, cells


def _extended_suffix(w: WeightSeq, upto: int) -> list:
    """Suffix weights W_0..W_upto with zeros past n (deeper indices cost nothing)."""
    return list(w.suffix) + [0] * max(0, upto - w.n)


def _solve(w: WeightSeq, spec: LevelSpec, max_level, mode: str, keep_tables: bool) -> DPResult:
    n = w.n
    if max_level is None:
        max_level = n
    if max_level < 1:
        raise InvalidInput("max_level must be at least 1")
    if spec.num_levels < max_level:
        raise InvalidInput(f"level spec covers {spec.num_levels} levels, need {max_level}")
    wext = _extended_suffix(w, 2 * n)
    prev: dict[Sig, int] = {(0, 1): 0}
    tables = [LevelTable(0, prev, {(0, 1): None} if keep_tables else None)]
    best = None  # (cost, level, n');  tuple order implements the tie-break
    cells = 0
    for i in range(1, max_level + 1):
        costs, preds, zeros, k = _fill_level(
            prev, n, spec.arity(i), spec.edge_length(i), wext, mode, keep_tables
        )
        cells += k
        for m, v in zeros:
            cand = (v, i, m)
            if best is None or cand < best:
                best = cand
        if keep_tables:
            tables.append(LevelTable(i, costs, preds))
        prev = costs
    if best is None:
        raise NoFeasibleTree(f"no full tree with >= {n} leaves within {max_level} levels")
    cost, level, nprime = best
    if not keep_tables:
        return DPResult(cost=cost, level=level, leaves_full=nprime, cells_updated=cells)
    expansions, full_seq = backtrack(tables, (level, nprime, cost))
    return DPResult(
        cost=cost,
        level=level,
        leaves_full=nprime,
        cells_updated=cells,
        expansions=expansions,
        leaf_sequence=prune_to_n(full_seq, n),
        tables=tuple(tables),
    )


def solve_naive(w: WeightSeq, spec: LevelSpec, max_level: int | None = None, *,
                keep_tables: bool = True) -> DPResult:
    """Fill every level table by direct minimization over predecessors."""
    return _solve(w, spec, max_level, "naive", keep_tables)


def solve_batched(w: WeightSeq, spec: LevelSpec, max_level: int | None = None, *,
                  keep_tables: bool = True) -> DPResult:
    """Batched fill; identical tables and answer as :func:`solve_naive`."""
    return _solve(w, spec, max_level, "batched", keep_tables)


def extract_answer(tables, w: WeightSeq, spec: LevelSpec) -> tuple[int, int, int]:
    """Best finished tree over all filled levels.

    Minimizes the cost of ``(n', 0)`` states; ties break toward the smallest
    level, then the smallest leaf count.  Returns ``(level, n', cost)``.
    """
    best = None
    for table in tables[1:]:
        for (m, b), v in table.costs.items():
            if b == 0:
                cand = (v, table.level, m)
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise NoFeasibleTree("no finished tree recorded in the tables")
    cost, level, nprime = best
    return level, nprime, cost


def backtrack(tables, answer: tuple[int, int, int]):
    """Follow stored predecessors from the answer state back to the root.

    Returns the expansion sequence ``(0,1) -> ... -> (n',0)`` and the full
    (unpruned) leaf sequence read off it: the leaves added by the level-i
    expansion are ``m_i - m_{i-1}``.
    """
    level, nprime, _cost = answer
    sig: Sig = (nprime, 0)
    chain = [sig]
    for i in range(level, 0, -1):
        table = tables[i]
        if table.preds is None or sig not in table.preds:
            raise InternalInconsistency(f"missing predecessor for {sig} at level {i}")
        sig = table.preds[sig]
        chain.append(sig)
    if sig != (0, 1):
        raise InternalInconsistency(f"backtrace ended at {sig}, expected (0, 1)")
    chain.reverse()
    counts = {}
    for i in range(1, len(chain)):
        added = chain[i][0] - chain[i - 1][0]
        if added < 0:
            raise InternalInconsistency("leaf count decreased along the backtrace")
        if added:
            counts[i] = added
    return tuple(chain), LeafSequence(counts)


def telescoped_cost(expansions, w: WeightSeq, spec: LevelSpec) -> int:
    """Recompute a backtrace's cost as the telescoped sum of c_i * W_{m_{i-1}}."""
    total = 0
    for i in range(1, len(expansions)):
        total += spec.edge_length(i) * w.tail_weight(expansions[i - 1][0])
    return total


def prune_to_n(seq: LeafSequence, n: int) -> LeafSequence:
    """Drop the deepest leaves one by one until exactly ``n`` remain."""
    excess = seq.total - n
    if excess < 0:
        raise InsufficientLeaves(f"cannot prune {seq.total} leaves down to {n}")
    if excess == 0:
        return seq
    counts = seq.as_dict()
    for level in sorted(counts, reverse=True):
        cut = min(excess, counts[level])
        counts[level] -= cut
        excess -= cut
        if not excess:
            break
    return LeafSequence(counts)


def _index_to_word(index: int, radices: list[int]) -> tuple[int, ...]:
    word = []
    for r in reversed(radices):
        index, sym = divmod(index, r)
        word.append(sym)
    word.reverse()
    return tuple(word)


def leafseq_to_codewords(seq: LeafSequence, spec: LevelSpec, w: WeightSeq) -> CodeBook:
    """Deterministic codeword emission: leftmost slots become leaves.

    At each level the available slots (children of the previous level's
    internal nodes) form a contiguous range in the positional number system
    whose per-position radix is the level arity; taking the first ``count``
    as leaves keeps the remainder contiguous, so no slot set is ever
    materialized.  Words come out level by level, lengths non-decreasing.
    """
    if seq.total != w.n:
        raise InvalidLeafSequence(
            f"sequence has {seq.total} leaves but {w.n} codewords are needed"
        )
    deepest = seq.deepest
    if deepest > 0 and spec.num_levels < deepest:
        raise InvalidLeafSequence("level spec does not cover the sequence")
    words: list[tuple[int, ...]] = []
    lo, hi = 0, 1  # available slot range at the current level
    radices: list[int] = []
    for i in range(1, deepest + 1):
        r = spec.arity(i)
        radices.append(r)
        lo, hi = lo * r, hi * r
        count = seq.count(i)
        if count > hi - lo:
            raise InvalidLeafSequence(f"level {i} has {hi - lo} slots, needs {count}")
        for idx in range(lo, lo + count):
            words.append(_index_to_word(idx, radices))
        lo += count
    return CodeBook(
        words=tuple(words),
        lengths=tuple(len(word) for word in words),
        cost=cost_of_leaf_sequence(seq, w, spec),
    )
