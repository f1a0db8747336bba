"""Test suite for the KNAPSACK gadgets"""

# pylint: disable=too-few-public-methods,invalid-name

import random

import pytest

from upcover.errors import InvalidInstance, SolutionBelowThreshold
from upcover.formats import format_solution, parse_solution
from upcover.model import Solution, UpgradePlan, classify
from upcover.oracle import decide, solve_exact
from upcover.reductions import (
    PATH,
    STAR,
    KnapsackInstance,
    extract_items,
    knapsack_dp,
    knapsack_select,
    knapsack_to_path,
    knapsack_to_star,
)
from upcover.tree import solve_tree_1

SMALL = KnapsackInstance(((2, 3), (3, 4)), 3, 4)


def random_knapsack(rng, max_items, max_capacity):
    capacity = rng.randint(1, max_capacity)
    items = tuple((rng.randint(1, capacity), rng.randint(1, 6)) for _ in range(rng.randint(1, max_items)))
    return KnapsackInstance(items, capacity, rng.randint(1, sum(b for _, b in items)))


class TestKnapsack:
    """Test cases for the reference knapsack DP"""

    def test_small(self):
        """Only one of the two items fits"""
        assert knapsack_dp(SMALL) == 4
        assert knapsack_select(SMALL) == (4, frozenset({1}))

    def test_select_is_feasible(self):
        """The selected items fit and reach the DP value"""
        rng = random.Random(1)
        for _ in range(100):
            ks = random_knapsack(rng, 8, 15)
            value, chosen = knapsack_select(ks)
            assert value == knapsack_dp(ks)
            assert sum(ks.items[k][0] for k in chosen) <= ks.capacity
            assert sum(ks.items[k][1] for k in chosen) == value

    def test_validate(self):
        """Item weights above the capacity and empty inputs are refused by the gadgets"""
        assert KnapsackInstance(((5, 1),), 3, 1).validate() == ["item 0: weight 5 exceeds capacity 3"]
        with pytest.raises(InvalidInstance):
            knapsack_to_star(KnapsackInstance((), 3, 1))
        with pytest.raises(InvalidInstance):
            knapsack_to_path(KnapsackInstance(((1, 1),), 3, 0))


class TestStarGadget:
    """Test cases for the star gadget"""

    def test_layout(self):
        """Center weight W = sum b + 1, satellite lengths R + g"""
        instance, threshold = knapsack_to_star(SMALL)
        assert instance.weights == (8, 3, 4)
        assert instance.radius == 4
        assert instance.budget == 3
        assert [e.length for e in instance.edges] == [6, 7]
        assert {e.bound for e in instance.edges} == {3}
        assert threshold == 12
        assert classify(instance) == "star"

    def test_decide_and_extract(self):
        """The oracle reaches the threshold and the extracted item is the knapsack choice"""
        instance, threshold = knapsack_to_star(SMALL)
        solution = solve_exact(instance)
        assert solution.value == threshold
        assert extract_items(solution, STAR, SMALL) == frozenset({1})
        assert not decide(instance, 1, threshold + 1)

    def test_below_threshold(self):
        """Solutions under the threshold carry no knapsack set"""
        instance, _ = knapsack_to_star(SMALL)
        weak = Solution.evaluate(instance, [0], UpgradePlan())
        with pytest.raises(SolutionBelowThreshold):
            extract_items(weak, STAR, SMALL)

    def test_round_trip(self):
        """Tree solver decision on the gadget equals the knapsack answer"""
        rng = random.Random(2)
        for _ in range(50):
            ks = random_knapsack(rng, 10, 15)
            instance, threshold = knapsack_to_star(ks)
            solution = solve_tree_1(instance)
            assert (solution.value >= threshold) == (knapsack_dp(ks) >= ks.target), ks
            again = parse_solution(format_solution(solution), instance)
            assert again.verify(instance)
            if solution.value >= threshold:
                chosen = extract_items(solution, STAR, ks)
                assert sum(ks.items[k][0] for k in chosen) <= ks.capacity
                assert sum(ks.items[k][1] for k in chosen) >= ks.target


class TestPathGadget:
    """Test cases for the path gadget"""

    def test_layout(self):
        """Heavy and item nodes alternate, links between pairs are 2R long"""
        instance, threshold, p = knapsack_to_path(SMALL)
        assert instance.weights == (8, 3, 8, 4)
        assert [e.endpoints for e in instance.edges] == [(0, 1), (1, 2), (2, 3)]
        assert [e.length for e in instance.edges] == [6, 8, 7]
        assert p == 2
        assert instance.facilities == 2
        assert threshold == 20
        assert classify(instance) == "path"

    def test_decide_and_extract(self):
        """Two facilities on the heavy nodes and the second item upgraded"""
        instance, threshold, p = knapsack_to_path(SMALL)
        solution = solve_exact(instance, p)
        assert solution.value == threshold
        assert extract_items(solution, PATH, SMALL) == frozenset({1})

    def test_round_trip(self):
        """Oracle decision on the gadget equals the knapsack answer"""
        rng = random.Random(4)
        for _ in range(30):
            ks = random_knapsack(rng, 4, 8)
            instance, threshold, p = knapsack_to_path(ks)
            solution = solve_exact(instance, p)
            assert (solution.value >= threshold) == (knapsack_dp(ks) >= ks.target), ks
            assert solution.verify(instance)
            if solution.value >= threshold:
                chosen = extract_items(solution, PATH, ks)
                assert sum(ks.items[k][0] for k in chosen) <= ks.capacity
                assert sum(ks.items[k][1] for k in chosen) >= ks.target

    def test_unknown_gadget(self):
        """Only star and path gadgets exist"""
        instance, _ = knapsack_to_star(SMALL)
        with pytest.raises(ValueError):
            extract_items(Solution.evaluate(instance, [0], UpgradePlan()), "tree", SMALL)
