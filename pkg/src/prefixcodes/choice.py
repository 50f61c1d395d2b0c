"""GMR solver where each level picks one of several (arity, edge length) options.

Per level, every option is filled independently from the previous combined
table (same batched machinery as the plain solver); the combined entry is the
per-signature minimum over options.  Equal-cost options resolve to the
smallest option index, so backtraces stay deterministic.  Per-option tables
are transient -- only the combined costs, the winning predecessor and the
winning option index per entry are retained.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ChoiceLevelSpec, LeafSequence, WeightSeq
from .errors import InternalInconsistency, InvalidInput, NoFeasibleTree
from .gmr import DPResult, Sig, _extended_suffix, _fill_level, prune_to_n


@dataclass(frozen=True)
class ChoiceLevelTable:
    """Combined per-level table plus the argmin option index per entry."""

    level: int
    costs: dict[Sig, int]
    preds: dict[Sig, Sig | None] | None
    options: dict[Sig, int] | None


def per_option_fill(cspec: ChoiceLevelSpec, i: int, j: int, prev_costs: dict,
                    w: WeightSeq, *, algorithm: str = "batched") -> dict[Sig, int]:
    """Level-``i`` fill pretending option ``j`` (0-based) were the level's parameters."""
    r, c = cspec.options(i)[j]
    wext = _extended_suffix(w, 2 * w.n)
    costs, _preds, _zeros, _cells = _fill_level(prev_costs, w.n, r, c, wext, algorithm, False)
    return costs


def solve_choice(w: WeightSeq, cspec: ChoiceLevelSpec, max_level: int | None = None, *,
                 algorithm: str = "batched", keep_tables: bool = True) -> DPResult:
    """Minimum-cost tree over all per-level option assignments."""
    n = w.n
    if max_level is None:
        max_level = cspec.num_levels
    if max_level < 1:
        raise InvalidInput("max_level must be at least 1")
    if cspec.num_levels < max_level:
        raise InvalidInput(f"choice spec covers {cspec.num_levels} levels, need {max_level}")
    wext = _extended_suffix(w, 2 * n)
    prev: dict[Sig, int] = {(0, 1): 0}
    tables = [ChoiceLevelTable(0, prev, {(0, 1): None} if keep_tables else None,
                               {(0, 1): None} if keep_tables else None)]
    best = None
    cells = 0
    for i in range(1, max_level + 1):
        combined: dict[Sig, int] = {}
        opt_idx: dict[Sig, int] = {}
        comb_preds: dict[Sig, Sig | None] = {}
        for j, (r, c) in enumerate(cspec.options(i)):
            costs, preds, _zeros, k = _fill_level(prev, n, r, c, wext, algorithm, keep_tables)
            cells += k + len(costs)
            for key, v in costs.items():
                if key not in combined or v < combined[key]:
                    combined[key] = v
                    opt_idx[key] = j
                    if keep_tables:
                        comb_preds[key] = preds[key]
        for (m, b), v in combined.items():
            if b == 0:
                cand = (v, i, m)
                if best is None or cand < best:
                    best = cand
        if keep_tables:
            tables.append(ChoiceLevelTable(i, combined, comb_preds, opt_idx))
        prev = combined
    if best is None:
        raise NoFeasibleTree(f"no option assignment yields a tree with {n} leaves")
    cost, level, nprime = best
    if not keep_tables:
        return DPResult(cost=cost, level=level, leaves_full=nprime, cells_updated=cells)

    # Backtrack through the combined tables, recording the winning option.
    sig: Sig = (nprime, 0)
    chain = [sig]
    chosen: list[int] = []
    for i in range(level, 0, -1):
        table = tables[i]
        if sig not in table.preds:
            raise InternalInconsistency(f"missing predecessor for {sig} at level {i}")
        chosen.append(table.options[sig])
        sig = table.preds[sig]
        chain.append(sig)
    if sig != (0, 1):
        raise InternalInconsistency(f"backtrace ended at {sig}, expected (0, 1)")
    chain.reverse()
    chosen.reverse()
    counts = {}
    for i in range(1, len(chain)):
        added = chain[i][0] - chain[i - 1][0]
        if added:
            counts[i] = added
    return DPResult(
        cost=cost,
        level=level,
        leaves_full=nprime,
        cells_updated=cells,
        expansions=tuple(chain),
        leaf_sequence=prune_to_n(LeafSequence(counts), n),
        tables=tuple(tables),
        options=tuple(chosen),
    )
