"""Minimum-cost prefix-free codes under structural constraints.

A top-down dynamic program over tree-level signatures solves generalized
mixed-radix instances exactly; reductions express mixed-radix coding,
reserved-length coding (given lengths, or a budget of distinct lengths) and
one-ended binary coding in the same framework.  Every solver has a naive and
a batched fill that produce bit-identical tables, and exhaustive oracles for
cross-checking at small sizes.
"""

from .choice import ChoiceLevelTable, per_option_fill, solve_choice
from .core import (
    MAX_WEIGHT,
    UNREACHABLE,
    ChoiceLevelSpec,
    CodeBook,
    LeafSequence,
    LevelSpec,
    WeightSeq,
    check_prefix_free,
    cost_of_leaf_sequence,
    kraft_slack,
    normalize_weights,
)
from .errors import (
    ArityOverflow,
    BudgetExceeded,
    InsufficientLeaves,
    InternalInconsistency,
    InvalidInput,
    InvalidLeafSequence,
    InvalidRange,
    NoFeasibleTree,
    PrefixCodeError,
)
from .gmr import (
    DPResult,
    LevelTable,
    backtrack,
    extract_answer,
    leafseq_to_codewords,
    predecessors,
    prune_to_n,
    solve_batched,
    solve_naive,
    telescoped_cost,
    valid_signature,
)
from .one_ended import (
    OneEndedResult,
    OneEndedTable,
    oe_predecessors,
    solve_one_ended,
    solve_one_ended_naive,
)
from .oracle import (
    OracleBudget,
    enumerate_choice,
    enumerate_gmr,
    enumerate_one_ended,
    huffman_greedy,
)
from .problems import (
    GLengthsSpec,
    MixedRadixSpec,
    ProblemResult,
    ReservedSpec,
    solve_huffman_reference_adapter,
    solve_mixed_radix,
    solve_reserved_g,
    solve_reserved_given,
)
from .rmq import RMQIndex

__version__ = "0.1.0"

__all__ = [
    "ArityOverflow",
    "BudgetExceeded",
    "ChoiceLevelSpec",
    "ChoiceLevelTable",
    "CodeBook",
    "DPResult",
    "GLengthsSpec",
    "InsufficientLeaves",
    "InternalInconsistency",
    "InvalidInput",
    "InvalidLeafSequence",
    "InvalidRange",
    "LeafSequence",
    "LevelSpec",
    "LevelTable",
    "MAX_WEIGHT",
    "MixedRadixSpec",
    "NoFeasibleTree",
    "OneEndedResult",
    "OneEndedTable",
    "OracleBudget",
    "PrefixCodeError",
    "ProblemResult",
    "RMQIndex",
    "ReservedSpec",
    "UNREACHABLE",
    "WeightSeq",
    "backtrack",
    "check_prefix_free",
    "cost_of_leaf_sequence",
    "enumerate_choice",
    "enumerate_gmr",
    "enumerate_one_ended",
    "extract_answer",
    "huffman_greedy",
    "kraft_slack",
    "leafseq_to_codewords",
    "normalize_weights",
    "oe_predecessors",
    "per_option_fill",
    "predecessors",
    "prune_to_n",
    "solve_batched",
    "solve_choice",
    "solve_huffman_reference_adapter",
    "solve_mixed_radix",
    "solve_naive",
    "solve_one_ended",
    "solve_one_ended_naive",
    "solve_reserved_g",
    "solve_reserved_given",
    "telescoped_cost",
    "valid_signature",
]
