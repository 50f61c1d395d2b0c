"""Command-line front end: solve, verify against oracles, benchmark.

Results are JSON on stdout, diagnostics on stderr; ``bench`` emits CSV.
Output is byte-identical across runs for a fixed seed and configuration:
timing fields stay null/empty unless ``--timing`` is passed.

Exit codes: 0 ok, 2 usage or input error, 3 no feasible code, 4 arity
overflow, 5 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import bench, oracle
from .core import LevelSpec, WeightSeq, normalize_weights
from .errors import (
    ArityOverflow,
    BudgetExceeded,
    NoFeasibleTree,
    PrefixCodeError,
)
from .gmr import leafseq_to_codewords, solve_batched, solve_naive
from .one_ended import solve_one_ended
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

PROBLEMS = ("gmr", "mixed-radix", "reserved-given", "reserved-g", "one-ended", "huffman")
_SPEC_ALIASES = {"binary": 2, "ternary": 3, "quaternary": 4}


def _parse_int_list(text: str) -> list[int]:
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty integer list")
    return [int(p) for p in parts]


def _read_weights(args) -> list[int]:
    if args.weights is not None:
        return _parse_int_list(args.weights)
    if args.weights_file is not None:
        with open(args.weights_file) as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("["):
            data = json.loads(text)
            if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
                raise ValueError("weights file JSON must be an array of integers")
            return data
        return [int(line.split()[0]) for line in text.splitlines() if line.strip()]
    raise ValueError("provide --weights or --weights-file")


def _level_spec(args, n: int) -> tuple[LevelSpec, int]:
    """Level spec for the generic problem; returns (spec, max_level)."""
    if args.spec_file:
        with open(args.spec_file) as fh:
            pairs = json.load(fh)
        spec = LevelSpec([(int(r), int(c)) for r, c in pairs])
        return spec, spec.num_levels
    radix = _SPEC_ALIASES.get(args.spec, args.radix) if args.spec else args.radix
    return LevelSpec.constant(radix, 1, n), n


def _words_as_json(codebook, order):
    """Codewords in the caller's original weight order; digit strings when
    every symbol fits one character, symbol arrays otherwise."""
    by_caller = [None] * len(codebook.words)
    for k, word in enumerate(codebook.words):
        by_caller[order[k]] = word
    if all(s < 10 for word in codebook.words for s in word):
        return ["".join(str(s) for s in word) for word in by_caller]
    return [list(word) for word in by_caller]


def _lengths_as_json(codebook, order):
    out = [0] * len(codebook.lengths)
    for k, length in enumerate(codebook.lengths):
        out[order[k]] = length
    return out


def _solve_problem(args, w: WeightSeq, want_code: bool) -> tuple[ProblemResult, dict]:
    extra: dict = {}
    if args.problem == "huffman":
        res = solve_huffman_reference_adapter(w, args.radix, algorithm=args.algorithm,
                                              want_code=want_code)
    elif args.problem == "mixed-radix":
        if not args.arities:
            raise ValueError("--arities is required for mixed-radix")
        res = solve_mixed_radix(w, MixedRadixSpec(tuple(_parse_int_list(args.arities))),
                                algorithm=args.algorithm, want_code=want_code)
    elif args.problem == "reserved-given":
        if not args.lengths:
            raise ValueError("--lengths is required for reserved-given")
        res = solve_reserved_given(w, ReservedSpec(args.radix, tuple(_parse_int_list(args.lengths))),
                                   algorithm=args.algorithm, want_code=want_code)
    elif args.problem == "reserved-g":
        if args.g is None:
            raise ValueError("--g is required for reserved-g")
        res = solve_reserved_g(w, GLengthsSpec(args.radix, args.g),
                               algorithm=args.algorithm, want_code=want_code)
    elif args.problem == "one-ended":
        oe = solve_one_ended(w, algorithm=args.algorithm, with_code=want_code)
        extra["expansions"] = [list(s) for s in oe.expansions]
        return ProblemResult(oe.codebook, None), {
            "cost": oe.cost, "cells_updated": oe.cells_updated, **extra}
    else:  # gmr
        spec, max_level = _level_spec(args, w.n)
        solver = solve_naive if args.algorithm == "naive" else solve_batched
        dp = solver(w, spec, max_level, keep_tables=want_code)
        code = leafseq_to_codewords(dp.leaf_sequence, spec, w) if want_code else None
        res = ProblemResult(code, dp)
    dp = res.dp
    extra["cost"] = dp.cost
    extra["cells_updated"] = dp.cells_updated
    if dp.expansions is not None:
        extra["expansions"] = [list(s) for s in dp.expansions]
        if dp.options is not None:
            extra["options"] = list(dp.options)
    return res, extra


def cmd_solve(args) -> int:
    w = normalize_weights(_read_weights(args))
    want_code = args.output != "cost"
    start = time.perf_counter()
    res, extra = _solve_problem(args, w, want_code)
    elapsed = time.perf_counter() - start
    doc = {
        "problem": args.problem,
        "n": w.n,
        "cost": extra["cost"],
        "algorithm": args.algorithm,
        "cells_updated": extra["cells_updated"],
        "lengths": _lengths_as_json(res.codebook, w.order) if res.codebook else None,
        "elapsed": elapsed if args.timing else None,
    }
    if args.output == "code":
        doc["codewords"] = _words_as_json(res.codebook, w.order)
    elif args.output == "leafseq":
        seq = res.dp.leaf_sequence if res.dp else None
        if seq is None and res.codebook is not None:
            counts: dict[int, int] = {}
            for length in res.codebook.lengths:
                counts[length] = counts.get(length, 0) + 1
            doc["leaf_sequence"] = {str(k): v for k, v in sorted(counts.items())}
        else:
            doc["leaf_sequence"] = {str(k): v for k, v in seq.items()}
    elif args.output == "trace":
        doc["expansions"] = extra.get("expansions")
        doc["options"] = extra.get("options")
    print(json.dumps(doc, sort_keys=True))
    return 0


def _oracle_cost(args, w: WeightSeq) -> int:
    budget = oracle.OracleBudget(max_n=args.max_oracle_n,
                                 max_depth=max(args.max_oracle_n, 8))
    if args.problem == "one-ended":
        return oracle.enumerate_one_ended(
            w, budget=oracle.OracleBudget(max_n=min(args.max_oracle_n, 6),
                                          max_depth=w.n + 2))
    if args.problem == "huffman":
        return oracle.huffman_greedy(w, args.radix)
    if args.problem == "mixed-radix":
        mr = MixedRadixSpec(tuple(_parse_int_list(args.arities)))
        spec = LevelSpec([(mr.arity_for_level(i), 1) for i in range(1, w.n + 1)])
        return oracle.enumerate_gmr(w, spec, w.n, budget)
    if args.problem == "reserved-given":
        from .problems import _meta_arity
        lengths = tuple(_parse_int_list(args.lengths))
        gaps = [b - a for a, b in zip((0,) + lengths, lengths)]
        spec = LevelSpec([(_meta_arity(args.radix, gap), gap) for gap in gaps])
        return oracle.enumerate_gmr(w, spec, len(gaps), budget)
    if args.problem == "reserved-g":
        from .core import ChoiceLevelSpec
        from .problems import glengths_options
        opts = glengths_options(args.radix, w.n)
        big = oracle.OracleBudget(max_n=args.max_oracle_n, max_depth=max(args.g, 8),
                                  max_option_sets=len(opts))
        return oracle.enumerate_choice(w, ChoiceLevelSpec([opts] * args.g), args.g, big)
    spec, max_level = _level_spec(args, w.n)
    return oracle.enumerate_gmr(w, spec, max_level, budget)


def cmd_verify(args) -> int:
    w = normalize_weights(_read_weights(args))
    res, extra = _solve_problem(args, w, want_code=False)
    oracle_cost = _oracle_cost(args, w)
    agree = extra["cost"] == oracle_cost
    doc = {
        "problem": args.problem,
        "n": w.n,
        "algorithm": args.algorithm,
        "solver_cost": extra["cost"],
        "oracle_cost": oracle_cost,
        "agree": agree,
    }
    print(json.dumps(doc, sort_keys=True))
    if not agree:
        print(f"mismatch: solver={extra['cost']} oracle={oracle_cost}", file=sys.stderr)
    return 0 if agree else 1


def cmd_bench(args) -> int:
    sizes = _parse_int_list(args.sizes)
    algorithms = args.algorithms.replace(",", " ").split()
    rows = bench.run_scaling(args.problem, sizes, algorithms,
                             distribution=args.distribution, seed=args.seed,
                             repetitions=args.repetitions, radix=args.radix,
                             g=args.g if args.g is not None else 3)
    writer = csv.writer(sys.stdout)
    writer.writerow(["problem", "algorithm", "n", "cells_updated", "wall_time"])
    for row in rows:
        wall = f"{row['wall_time']:.6f}" if args.timing else ""
        writer.writerow([row["problem"], row["algorithm"], row["n"],
                         row["cells_updated"], wall])
    print(f"# params distribution={args.distribution} seed={args.seed} "
          f"repetitions={args.repetitions} radix={args.radix}")
    for (problem, algorithm), slope in sorted(bench.slope_summary(rows).items()):
        if slope is not None:
            print(f"# slope problem={problem} algorithm={algorithm} value={slope:.4f}")
    return 0


def _add_common(p):
    p.add_argument("--problem", required=True, choices=PROBLEMS)
    p.add_argument("--algorithm", default="batched", choices=("naive", "batched"))
    p.add_argument("--weights", help="inline weights, e.g. '3 2 1 1'")
    p.add_argument("--weights-file", help="one integer per line, or a JSON array")
    p.add_argument("--radix", type=int, default=2, help="alphabet size (default 2)")
    p.add_argument("--spec", help="named level spec for gmr: binary/ternary/quaternary")
    p.add_argument("--spec-file", help="JSON [[arity, edge_length], ...] for gmr")
    p.add_argument("--arities", help="mixed-radix per-position arities, e.g. '4 2 3'")
    p.add_argument("--lengths", help="reserved-given permitted lengths, e.g. '1 3 6'")
    p.add_argument("--g", type=int, help="reserved-g distinct-length budget")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefixcodes",
        description="Minimum-cost prefix-free codes under structural constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance and print JSON")
    _add_common(p)
    p.add_argument("--output", default="code", choices=("cost", "code", "leafseq", "trace"))
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cross-check the solver against an oracle")
    _add_common(p)
    p.add_argument("--max-oracle-n", type=int, default=8,
                   help="enumeration budget (default 8; one-ended capped at 6)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="scaling run; CSV on stdout")
    p.add_argument("--problem", required=True, choices=bench.PROBLEMS)
    p.add_argument("--sizes", default="50 100 200 400")
    p.add_argument("--algorithms", default="naive batched")
    p.add_argument("--distribution", default="uniform", choices=bench.DISTRIBUTIONS)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--radix", type=int, default=2)
    p.add_argument("--g", type=int)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoFeasibleTree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ArityOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except (PrefixCodeError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
