"""Reduction adapters: named coding problems expressed as mixed-radix solves.

Each adapter builds the level spec for its problem, runs the shared solver,
and maps the winning leaf sequence back to codewords over the original
alphabet.  Reserved-length codes collapse runs of levels between permitted
lengths into one "meta" level of arity r**gap and edge length gap; the
winning meta leaves are then re-expanded into r-ary words by the same
leftmost-slot rule the plain emitter uses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .choice import solve_choice
from .core import ChoiceLevelSpec, CodeBook, LeafSequence, LevelSpec, WeightSeq
from .errors import ArityOverflow, InvalidInput, NoFeasibleTree
from .gmr import DPResult, leafseq_to_codewords, solve_batched, solve_naive

#: Meta arities beyond roughly 2**256 are rejected: they cannot change which
#: trees are optimal (a level never usefully exceeds r * n slots) and only
#: inflate the arithmetic.
_MAX_ARITY_BITS = 257


@dataclass(frozen=True)
class MixedRadixSpec:
    """Permitted arity per codeword position; the last entry repeats for
    deeper positions."""

    arities: tuple[int, ...]

    def __post_init__(self):
        if not self.arities:
            raise InvalidInput("need at least one arity")
        for t in self.arities:
            if not isinstance(t, int) or t < 2:
                raise InvalidInput(f"arities must be integers >= 2, got {t!r}")

    def arity_for_level(self, i: int) -> int:
        return self.arities[min(i - 1, len(self.arities) - 1)]


@dataclass(frozen=True)
class ReservedSpec:
    """Alphabet size and the exact set of permitted codeword lengths."""

    radix: int
    lengths: tuple[int, ...]

    def __post_init__(self):
        if self.radix < 2:
            raise InvalidInput("alphabet size must be >= 2")
        if not self.lengths:
            raise InvalidInput("need at least one permitted length")
        prev = 0
        for g in self.lengths:
            if not isinstance(g, int) or g <= prev:
                raise InvalidInput("lengths must be strictly increasing integers >= 1")
            prev = g


@dataclass(frozen=True)
class GLengthsSpec:
    """Alphabet size and a budget of distinct codeword lengths."""

    radix: int
    g: int

    def __post_init__(self):
        if self.radix < 2:
            raise InvalidInput("alphabet size must be >= 2")
        if self.g < 1:
            raise InvalidInput("length budget must be >= 1")


@dataclass(frozen=True)
class ProblemResult:
    """A solved reduction: the emitted code plus the underlying DP result
    (None when the producing solver keeps a different result shape)."""

    codebook: CodeBook | None
    dp: DPResult | None


def _run(w, spec, max_level, algorithm, want_code):
    solver = solve_naive if algorithm == "naive" else solve_batched
    return solver(w, spec, max_level, keep_tables=want_code)


def solve_mixed_radix(w: WeightSeq, mrspec: MixedRadixSpec, *, algorithm: str = "batched",
                      want_code: bool = True) -> ProblemResult:
    """Arity varies by codeword position, all edges length 1."""
    spec = LevelSpec([(mrspec.arity_for_level(i), 1) for i in range(1, w.n + 1)])
    dp = _run(w, spec, w.n, algorithm, want_code)
    code = leafseq_to_codewords(dp.leaf_sequence, spec, w) if want_code else None
    return ProblemResult(code, dp)


def solve_huffman_reference_adapter(w: WeightSeq, r: int, *, algorithm: str = "batched",
                                    want_code: bool = True) -> ProblemResult:
    """Constant arity r, unit edges: plain r-ary Huffman as a GMR instance."""
    if r < 2:
        raise InvalidInput("alphabet size must be >= 2")
    spec = LevelSpec.constant(r, 1, w.n)
    dp = _run(w, spec, w.n, algorithm, want_code)
    code = leafseq_to_codewords(dp.leaf_sequence, spec, w) if want_code else None
    return ProblemResult(code, dp)


def _meta_arity(r: int, gap: int) -> int:
    if gap * (r.bit_length() - 1) >= _MAX_ARITY_BITS or gap * r.bit_length() > 8 * _MAX_ARITY_BITS:
        raise ArityOverflow(f"{r}**{gap} exceeds the supported arity range")
    meta = r**gap
    if meta.bit_length() > _MAX_ARITY_BITS:
        raise ArityOverflow(f"{r}**{gap} exceeds the supported arity range")
    return meta


def _expand_to_radix(seq: LeafSequence, depth_of_level, r: int, w: WeightSeq) -> CodeBook:
    """Map meta-level leaves to r-ary words: leaf on meta level k becomes a
    word of length depth(k).  Leftmost-slot assignment at every level keeps
    the emitted code canonical."""
    counts = {depth_of_level(level): count for level, count in seq.items()}
    max_len = max(counts) if counts else 1
    return leafseq_to_codewords(LeafSequence(counts), LevelSpec.constant(r, 1, max_len), w)


def solve_reserved_given(w: WeightSeq, rspec: ReservedSpec, *, algorithm: str = "batched",
                         want_code: bool = True) -> ProblemResult:
    """All codeword lengths must come from the given set."""
    r = rspec.radix
    gaps = []
    prev = 0
    for g in rspec.lengths:
        gaps.append(g - prev)
        prev = g
    spec = LevelSpec([(_meta_arity(r, gap), gap) for gap in gaps])
    capacity = 1
    for gap in gaps:
        capacity *= r**gap
    if capacity < w.n:
        raise NoFeasibleTree(
            f"only {capacity} words of permitted lengths exist, need {w.n}"
        )
    dp = _run(w, spec, len(gaps), algorithm, want_code)
    code = None
    if want_code:
        code = _expand_to_radix(dp.leaf_sequence, lambda k: rspec.lengths[k - 1], r, w)
    return ProblemResult(code, dp)


def glengths_options(r: int, n: int) -> tuple[tuple[int, int], ...]:
    """Option set (r**t, t) for t = 1 .. 1 + floor(log_r n).

    t = 0 would be a leaf-free no-op level, and no level ever needs more than
    r * n slots, which caps the useful jump at this range.
    """
    tmax = 1
    power = r
    while power <= n:
        power *= r
        tmax += 1
    return tuple((r**t, t) for t in range(1, tmax + 1))


def solve_reserved_g(w: WeightSeq, gspec: GLengthsSpec, *, algorithm: str = "batched",
                     want_code: bool = True) -> ProblemResult:
    """At most g distinct codeword lengths, the lengths themselves are free."""
    r = gspec.radix
    options = glengths_options(r, w.n)
    cspec = ChoiceLevelSpec([options] * gspec.g)
    dp = solve_choice(w, cspec, gspec.g, algorithm=algorithm, keep_tables=want_code)
    code = None
    if want_code:
        depths = [0]
        for j in dp.options:
            depths.append(depths[-1] + options[j][1])
        code = _expand_to_radix(dp.leaf_sequence, lambda k: depths[k], r, w)
    return ProblemResult(code, dp)
