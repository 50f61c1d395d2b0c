import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prefixcodes import (
    MAX_WEIGHT,
    InsufficientLeaves,
    InvalidInput,
    InvalidLeafSequence,
    LeafSequence,
    LevelSpec,
    WeightSeq,
    check_prefix_free,
    cost_of_leaf_sequence,
    kraft_slack,
    normalize_weights,
)

BINARY3 = LevelSpec.constant(2, 1, 3)


class TestNormalizeWeights:
    def test_sorts_and_sums(self):
        w = normalize_weights([1, 3, 2])
        assert w.weights == (3, 2, 1)
        assert w.suffix == (6, 3, 1, 0)

    def test_suffix_values(self):
        w = normalize_weights([3, 2, 1, 1])
        assert w.tail_weight(0) == 7
        assert w.tail_weight(2) == 2
        assert w.tail_weight(4) == 0

    def test_single(self):
        w = normalize_weights([5])
        assert w.weights == (5,)
        assert w.suffix == (5, 0)

    def test_order_maps_back_to_caller(self):
        w = normalize_weights([1, 3, 2])
        assert [1, 3, 2][w.order[0]] == 3
        assert [w.weights[k] for k in range(3)] == [[1, 3, 2][w.order[k]] for k in range(3)]

    def test_ties_keep_input_order(self):
        w = normalize_weights([7, 9, 7])
        assert w.order == (1, 0, 2)

    @pytest.mark.parametrize("bad", [[], [-1], [1, -2, 3], [1.5], [MAX_WEIGHT + 1], [True]])
    def test_rejects_bad_input(self, bad):
        with pytest.raises(InvalidInput):
            normalize_weights(bad)

    def test_padding_reads_as_zero(self):
        w = normalize_weights([4, 2])
        assert w.weight(1) == 4
        assert w.weight(99) == 0
        assert w.tail_weight(99) == 0

    @given(st.lists(st.integers(min_value=0, max_value=10**9), min_size=1, max_size=30))
    @settings(max_examples=60, deadline=None)
    def test_suffix_invariants(self, raw):
        w = normalize_weights(raw)
        assert w.suffix[0] == sum(raw)
        assert w.suffix[w.n] == 0
        assert all(a >= b for a, b in zip(w.suffix, w.suffix[1:]))
        assert all(a >= b for a, b in zip(w.weights, w.weights[1:]))

    def test_rejects_unsorted_direct_construction(self):
        with pytest.raises(InvalidInput):
            WeightSeq([1, 2])


class TestCostOfLeafSequence:
    def test_uniform_depth_two(self):
        w = normalize_weights([1, 1, 1, 1])
        assert cost_of_leaf_sequence(LeafSequence({2: 4}), w, BINARY3) == 8

    def test_mixed_depths(self):
        w = normalize_weights([4, 1, 1])
        assert cost_of_leaf_sequence(LeafSequence({1: 1, 2: 2}), w, BINARY3) == 8

    def test_level_zero_count_ignored(self):
        w = normalize_weights([1, 2, 3, 4])
        assert cost_of_leaf_sequence(LeafSequence({2: 4, 0: 0}), w, BINARY3) == 20

    def test_weighted_edges(self):
        w = normalize_weights([1, 1])
        spec = LevelSpec([(2, 3)])
        assert cost_of_leaf_sequence(LeafSequence({1: 2}), w, spec) == 6

    def test_unrealizable(self):
        w = normalize_weights([1, 1, 1])
        with pytest.raises(InvalidLeafSequence):
            cost_of_leaf_sequence(LeafSequence({1: 3}), w, BINARY3)

    def test_insufficient(self):
        w = normalize_weights([1, 1, 1])
        with pytest.raises(InsufficientLeaves):
            cost_of_leaf_sequence(LeafSequence({1: 2}), w, BINARY3)

    def test_padding_never_changes_cost(self):
        # zero-weight leaves dropped into the terminal level's spare slot
        w = normalize_weights([5, 3])
        base = cost_of_leaf_sequence(LeafSequence({1: 1, 2: 1}), w, BINARY3)
        padded = cost_of_leaf_sequence(LeafSequence({1: 1, 2: 2}), w, BINARY3)
        assert padded == base == 11


class TestCheckPrefixFree:
    def test_classic_positive(self):
        assert check_prefix_free(["01", "00", "100"])

    def test_classic_violation(self):
        assert not check_prefix_free(["01", "00", "001"])

    def test_empty(self):
        assert check_prefix_free([])

    def test_duplicates_rejected(self):
        assert not check_prefix_free(["01", "01"])

    def test_tuple_words(self):
        assert check_prefix_free([(0,), (1, 0), (1, 1)])
        assert not check_prefix_free([(1,), (1, 0)])

    @given(st.lists(st.text(alphabet="012", min_size=1, max_size=5), max_size=8))
    @settings(max_examples=80, deadline=None)
    def test_matches_quadratic_definition(self, words):
        naive = all(
            not (len(a) <= len(b) and b.startswith(a))
            for i, a in enumerate(words)
            for j, b in enumerate(words)
            if i != j
        )
        assert check_prefix_free(words) == naive


class TestKraftSlack:
    def test_exactly_full(self):
        assert kraft_slack(LeafSequence({1: 2}), BINARY3) == 0

    def test_overfull(self):
        assert kraft_slack(LeafSequence({1: 3}), BINARY3) == -1

    def test_spare_slot(self):
        assert kraft_slack(LeafSequence({1: 3}), LevelSpec([(4, 1)])) == 1

    def test_empty_sequence(self):
        assert kraft_slack(LeafSequence({}), BINARY3) == 1

    def test_deficit_propagates(self):
        assert kraft_slack(LeafSequence({1: 3, 2: 1}), BINARY3) == -3


class TestLeafSequence:
    def test_normalizes(self):
        assert LeafSequence({2: 1, 1: 0}) == LeafSequence([(2, 1)])
        assert LeafSequence({1: 2}).total == 2
        assert LeafSequence({3: 1, 1: 1}).deepest == 3

    def test_rejects_bad_levels(self):
        with pytest.raises(InvalidInput):
            LeafSequence({0: 1})
        with pytest.raises(InvalidInput):
            LeafSequence({1: -1})
