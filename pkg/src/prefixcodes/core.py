"""Shared domain types: weight sequences, level specs, leaf sequences, codebooks.

All weights and costs are exact Python integers.  Callers holding
probabilities pre-scale them to integers; cost comparison is then exact and
argmin tie-breaking is deterministic.  Because Python integers are unbounded,
cost arithmetic cannot overflow; the input range for a single weight is still
capped at 64 bits so that instances remain sane.  ``UNREACHABLE`` (IEEE
infinity) is the sentinel for "no tree attains this state" -- it compares
greater than every exact cost and can never be produced by integer
arithmetic, so it cannot be confused with a real value.

Everything here is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    InsufficientLeaves,
    InvalidInput,
    InvalidLeafSequence,
)

#: Sentinel cost for unreachable DP states.  Never stored in tables (absent
#: entries mean unreachable); used only in comparisons and window scans.
UNREACHABLE = float("inf")

#: Largest accepted individual weight (unsigned 64-bit range).
MAX_WEIGHT = 2**64 - 1


def _check_weight(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"weights must be exact integers, got {value!r}")
    if value < 0:
        raise InvalidInput(f"weights must be non-negative, got {value}")
    if value > MAX_WEIGHT:
        raise InvalidInput(f"weight {value} exceeds the 64-bit input range")
    return value


class WeightSeq:
    """A non-increasing sequence of exact integer weights with suffix sums.

    ``suffix[m]`` holds ``W_m``, the total weight of entries strictly after
    position ``m`` (1-indexed positions).  Positions past ``n`` carry an
    implicit weight of zero, so ``tail_weight(m)`` is defined for every
    ``m >= 0``.
    """

    __slots__ = ("weights", "n", "suffix", "order")

    def __init__(self, weights: Sequence[int], order: Sequence[int] | None = None):
        ws = tuple(_check_weight(x) for x in weights)
        if not ws:
            raise InvalidInput("weight sequence must be non-empty")
        for a, b in zip(ws, ws[1:]):
            if a < b:
                raise InvalidInput("weights must be sorted non-increasing")
        n = len(ws)
        suf = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suf[i] = suf[i + 1] + ws[i]
        self.weights = ws
        self.n = n
        self.suffix = tuple(suf)
        if order is None:
            order = tuple(range(n))
        else:
            order = tuple(order)
            if sorted(order) != list(range(n)):
                raise InvalidInput("order must be a permutation of 0..n-1")
        self.order = order

    def weight(self, i: int) -> int:
        """Weight at 1-indexed position ``i``; zero past the real entries."""
        if i < 1:
            raise InvalidInput("weight positions are 1-indexed")
        return self.weights[i - 1] if i <= self.n else 0

    def tail_weight(self, m: int) -> int:
        """Total weight of positions strictly greater than ``m``."""
        if m < 0:
            raise InvalidInput("tail index must be non-negative")
        return self.suffix[m] if m <= self.n else 0

    def __repr__(self):
        return f"WeightSeq({list(self.weights)!r})"


def normalize_weights(raw: Sequence[int]) -> WeightSeq:
    """Sort raw weights non-increasing and precompute suffix sums.

    The permutation from sorted position back to the caller's original
    position is retained (``order[k]`` is the original index of sorted entry
    ``k``) so codewords can be reported in input order.  Ties keep their
    original relative order, which makes output deterministic.
    """
    items = list(raw)
    if not items:
        raise InvalidInput("weight sequence must be non-empty")
    for x in items:
        _check_weight(x)
    order = sorted(range(len(items)), key=lambda i: -items[i])
    return WeightSeq([items[i] for i in order], order)


class LevelSpec:
    """Per-level tree parameters: arity and edge length for levels 1, 2, ...

    ``depth(i)`` is the cumulative edge length from the root down to level
    ``i`` -- the weighted depth of every node on that level.
    """

    __slots__ = ("levels", "_depths")

    def __init__(self, levels: Iterable[tuple[int, int]]):
        lv = tuple((int(r), int(c)) for r, c in levels)
        if not lv:
            raise InvalidInput("level spec must cover at least one level")
        for r, c in lv:
            if r < 2:
                raise InvalidInput(f"every level arity must be >= 2, got {r}")
            if c < 1:
                raise InvalidInput(f"every edge length must be >= 1, got {c}")
        depths = [0]
        for _, c in lv:
            depths.append(depths[-1] + c)
        self.levels = lv
        self._depths = tuple(depths)

    @classmethod
    def constant(cls, arity: int, edge_length: int = 1, count: int = 1) -> "LevelSpec":
        """A spec repeating one (arity, edge length) pair for ``count`` levels."""
        return cls([(arity, edge_length)] * count)

    @property
    def num_levels(self) -> int:
        return len(self.levels)

    def arity(self, i: int) -> int:
        return self.levels[i - 1][0]

    def edge_length(self, i: int) -> int:
        return self.levels[i - 1][1]

    def depth(self, i: int) -> int:
        return self._depths[i]

    def __repr__(self):
        return f"LevelSpec({list(self.levels)!r})"


class ChoiceLevelSpec:
    """A level spec where each level offers a set of (arity, edge length) options."""

    __slots__ = ("levels",)

    def __init__(self, levels: Iterable[Iterable[tuple[int, int]]]):
        out = []
        for options in levels:
            opts = tuple((int(r), int(c)) for r, c in options)
            if not opts:
                raise InvalidInput("every level needs at least one option")
            if len(set(opts)) != len(opts):
                raise InvalidInput("options within a level must be distinct")
            for r, c in opts:
                if r < 2 or c < 1:
                    raise InvalidInput(f"bad option ({r}, {c})")
            out.append(opts)
        if not out:
            raise InvalidInput("choice spec must cover at least one level")
        self.levels = tuple(out)

    @property
    def num_levels(self) -> int:
        return len(self.levels)

    def options(self, i: int) -> tuple[tuple[int, int], ...]:
        return self.levels[i - 1]

    def __repr__(self):
        return f"ChoiceLevelSpec({[list(o) for o in self.levels]!r})"


class LeafSequence:
    """Per-level labeled-leaf counts; zero counts are dropped on construction."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]]):
        if isinstance(counts, Mapping):
            items = counts.items()
        else:
            items = counts
        norm: dict[int, int] = {}
        for level, count in items:
            level = int(level)
            count = int(count)
            if count < 0:
                raise InvalidInput(f"leaf count at level {level} is negative")
            if count == 0:
                continue
            if level < 1:
                raise InvalidInput("leaves may only appear on levels >= 1")
            norm[level] = norm.get(level, 0) + count
        self._counts = tuple(sorted(norm.items()))

    def count(self, level: int) -> int:
        for lv, c in self._counts:
            if lv == level:
                return c
        return 0

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._counts

    def as_dict(self) -> dict[int, int]:
        return dict(self._counts)

    @property
    def total(self) -> int:
        return sum(c for _, c in self._counts)

    @property
    def deepest(self) -> int:
        """Terminal level (0 when the sequence is empty)."""
        return self._counts[-1][0] if self._counts else 0

    def __eq__(self, other):
        return isinstance(other, LeafSequence) and self._counts == other._counts

    def __hash__(self):
        return hash(self._counts)

    def __repr__(self):
        return f"LeafSequence({dict(self._counts)!r})"


@dataclass(frozen=True)
class CodeBook:
    """A finished code: one word per weight, in sorted-weight order.

    ``words`` are tuples of per-level symbols.  ``lengths[i]`` is the symbol
    count of word ``i`` and ``cost`` is the exact weighted depth total, which
    for unit edge lengths coincides with the length-weighted cost.
    """

    words: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    cost: int


def kraft_slack(seq: LeafSequence, spec: LevelSpec) -> int:
    """Remaining node budget on the terminal level after placing all leaves.

    Zero means the tree is exactly full, positive means spare slots, negative
    means the sequence is unrealizable.
    """
    deepest = seq.deepest
    if deepest == 0:
        return 1  # bare root, nothing placed
    if spec.num_levels < deepest:
        raise InvalidInput("level spec does not cover the sequence's deepest level")
    budget = 1
    slack = 1
    for i in range(1, deepest + 1):
        budget = budget * spec.arity(i)
        slack = budget - seq.count(i)
        budget = slack
    return slack


def cost_of_leaf_sequence(seq: LeafSequence, w: WeightSeq, spec: LevelSpec) -> int:
    """Exact cost of a leaf sequence: weights are assigned shallowest-first.

    Leaves beyond the real weight count carry weight zero, so padding a
    sequence with extra deep leaves never changes its cost.
    """
    if seq.deepest > 0 and spec.num_levels < seq.deepest:
        raise InvalidLeafSequence("level spec does not cover the sequence")
    if kraft_slack(seq, spec) < 0:
        raise InvalidLeafSequence(f"{seq!r} is not realizable under {spec!r}")
    if seq.total < w.n:
        raise InsufficientLeaves(f"{seq.total} leaves cannot host {w.n} weights")
    cost = 0
    placed = 0
    for level, count in seq.items():
        lo = min(placed, w.n)
        hi = min(placed + count, w.n)
        cost += spec.depth(level) * (w.suffix[lo] - w.suffix[hi])
        placed += count
    return cost


def check_prefix_free(words: Iterable[Sequence]) -> bool:
    """True iff no word is a proper prefix of, or equal to, another."""
    ws = sorted(words)
    for a, b in zip(ws, ws[1:]):
        if len(a) <= len(b) and b[: len(a)] == a:
            return False
    return True
