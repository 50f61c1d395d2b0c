import random

import pytest
from helpers import assert_same_solution, random_weights

from prefixcodes import (
    ChoiceLevelSpec,
    InvalidInput,
    LevelSpec,
    NoFeasibleTree,
    OracleBudget,
    enumerate_choice,
    normalize_weights,
    per_option_fill,
    solve_batched,
    solve_choice,
)

TWO_OPTIONS = [(2, 1), (4, 2)]


class TestSpecValidation:
    def test_rejects_duplicate_options(self):
        with pytest.raises(InvalidInput):
            ChoiceLevelSpec([[(2, 1), (2, 1)]])

    def test_rejects_empty_level(self):
        with pytest.raises(InvalidInput):
            ChoiceLevelSpec([[]])


class TestSolveChoice:
    def test_degenerate_single_option(self):
        w = normalize_weights([3, 2, 1, 1])
        rc = solve_choice(w, ChoiceLevelSpec([[(2, 1)]] * 4), 4)
        rb = solve_batched(w, LevelSpec.constant(2, 1, 4), 4)
        assert rc.cost == rb.cost == 13
        assert rc.expansions == rb.expansions
        assert all(a.costs == b.costs and a.preds == b.preds
                   for a, b in zip(rc.tables, rb.tables))

    def test_tied_routes(self):
        w = normalize_weights([1, 1, 1, 1])
        res = solve_choice(w, ChoiceLevelSpec([TWO_OPTIONS] * 4), 4)
        assert res.cost == 8  # depth-2 binary ties the single arity-4 level

    def test_skewed_weights(self):
        # frozen from the option-assignment enumeration oracle
        w = normalize_weights([8, 1, 1, 1])
        res = solve_choice(w, ChoiceLevelSpec([TWO_OPTIONS] * 4), 4)
        assert res.cost == 16
        assert res.options == (0, 0, 0)

    def test_options_recorded_along_chain(self):
        w = normalize_weights([1, 1, 1, 1])
        res = solve_choice(w, ChoiceLevelSpec([TWO_OPTIONS] * 4), 4)
        assert len(res.options) == res.level
        assert all(0 <= j < 2 for j in res.options)


class TestPerOptionFill:
    def test_root_expansion_binary(self):
        cspec = ChoiceLevelSpec([TWO_OPTIONS])
        w = normalize_weights([1, 1])
        table = per_option_fill(cspec, 1, 0, {(0, 1): 0}, w)
        assert table == {(0, 2): 2, (1, 1): 2, (2, 0): 2}

    def test_root_expansion_wide(self):
        cspec = ChoiceLevelSpec([TWO_OPTIONS])
        w = normalize_weights([1, 1])
        table = per_option_fill(cspec, 1, 1, {(0, 1): 0}, w)
        assert table == {(4, 0): 4}  # edge length 2 charges 2 * W_0

    def test_unreachable_propagates(self):
        cspec = ChoiceLevelSpec([TWO_OPTIONS])
        w = normalize_weights([1, 1])
        assert per_option_fill(cspec, 1, 0, {}, w) == {}


class TestInvariants:
    def test_degeneracy_randomized(self):
        rng = random.Random(71)
        for _ in range(25):
            n = rng.randint(1, 30)
            ml = rng.randint(1, 6)
            levels = [(rng.randint(2, 4), rng.randint(1, 3)) for _ in range(ml)]
            w = normalize_weights(random_weights(rng, n))
            try:
                rb = solve_batched(w, LevelSpec(levels), ml)
            except NoFeasibleTree:
                with pytest.raises(NoFeasibleTree):
                    solve_choice(w, ChoiceLevelSpec([[lv] for lv in levels]), ml)
                continue
            rc = solve_choice(w, ChoiceLevelSpec([[lv] for lv in levels]), ml)
            assert rc.cost == rb.cost and rc.expansions == rb.expansions

    def test_naive_and_batched_option_fills_agree(self):
        rng = random.Random(55)
        for _ in range(15):
            n = rng.randint(1, 12)
            w = normalize_weights(random_weights(rng, n))
            cspec = ChoiceLevelSpec([TWO_OPTIONS] * 3)
            try:
                rb = solve_choice(w, cspec, 3)
            except NoFeasibleTree:
                continue
            rn = solve_choice(w, cspec, 3, algorithm="naive")
            assert_same_solution(rn, rb)
            assert rn.options == rb.options

    def test_option_dominance(self):
        rng = random.Random(17)
        for _ in range(15):
            n = rng.randint(1, 8)
            w = normalize_weights(random_weights(rng, n))
            base = [[(2, 1)]] * 3
            richer = [[(2, 1), (3, 1)]] * 3
            try:
                a = solve_choice(w, ChoiceLevelSpec(base), 3).cost
            except NoFeasibleTree:
                continue
            b = solve_choice(w, ChoiceLevelSpec(richer), 3).cost
            assert b <= a

    def test_oracle_equivalence_small(self):
        rng = random.Random(23)
        budget = OracleBudget(max_n=6, max_depth=3, max_option_sets=3)
        for _ in range(30):
            n = rng.randint(1, 6)
            ml = rng.randint(1, 3)
            options = []
            for _ in range(ml):
                k = rng.randint(1, 3)
                opts = set()
                while len(opts) < k:
                    opts.add((rng.randint(2, 4), rng.randint(1, 2)))
                options.append(sorted(opts))
            w = normalize_weights(random_weights(rng, n))
            cspec = ChoiceLevelSpec(options)
            try:
                want = enumerate_choice(w, cspec, ml, budget)
            except NoFeasibleTree:
                with pytest.raises(NoFeasibleTree):
                    solve_choice(w, cspec, ml)
                continue
            assert solve_choice(w, cspec, ml).cost == want
