"""KNAPSACK gadgets on stars and paths, item extraction and a reference knapsack DP."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from upcover.errors import InvalidInstance, SolutionBelowThreshold
from upcover.model import EdgeAttrs, Instance, Solution, coverage

LOGGER = logging.getLogger("Upcover.Reductions")

STAR = "star"
PATH = "path"


@dataclass(frozen=True)
class KnapsackInstance:
    """Items as (weight g, value b) pairs, capacity K and target value U."""

    items: tuple
    capacity: int
    target: object

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def total_value(self) -> int:
        return sum(b for _, b in self.items)

    @property
    def heavy_node_weight(self) -> int:
        """W: the smallest integer above the total item value."""
        return self.total_value + 1

    def validate(self) -> list[str]:
        violations = []
        if self.capacity < 0:
            violations.append("capacity: negative")
        if not self.target > 0:
            violations.append("target: must be positive")
        for k, (g, b) in enumerate(self.items):
            if g < 1 or b < 1:
                violations.append(f"item {k}: weight and value must be positive")
            if g > self.capacity:
                violations.append(f"item {k}: weight {g} exceeds capacity {self.capacity}")
        return violations


def _require_gadget_input(ks: KnapsackInstance) -> None:
    violations = ks.validate()
    if not ks.items:
        violations.append("items: a gadget needs at least one item")
    if violations:
        raise InvalidInstance(violations)


def _gadget_parameters(ks: KnapsackInstance):
    bound = max(g for g, _ in ks.items)
    return bound, bound + 1


def knapsack_to_star(ks: KnapsackInstance) -> tuple[Instance, int]:
    """Center of weight W, one satellite per item with edge length R + g_i; threshold W + U."""
    _require_gadget_input(ks)
    bound, radius = _gadget_parameters(ks)
    heavy = ks.heavy_node_weight
    weights = (heavy, *(b for _, b in ks.items))
    edges = tuple(EdgeAttrs((0, k + 1), radius + g, bound, 1) for k, (g, _) in enumerate(ks.items))
    instance = Instance(weights, edges, radius, ks.capacity, 1, True)
    threshold = heavy + ks.target
    LOGGER.debug("Star gadget: %d satellites, R=%d, B=%d, T=%s", ks.n, radius, ks.capacity, threshold)
    return instance, threshold


def knapsack_to_path(ks: KnapsackInstance) -> tuple[Instance, int, int]:
    """
    Path of 2n nodes alternating heavy nodes (weight W) and item nodes (weight
    b_k); item edges have length R + g_k, the links between pairs 2R.
    """
    _require_gadget_input(ks)
    bound, radius = _gadget_parameters(ks)
    heavy = ks.heavy_node_weight
    weights = []
    edges = []
    for k, (g, b) in enumerate(ks.items):
        weights.extend((heavy, b))
        edges.append(EdgeAttrs((2 * k, 2 * k + 1), radius + g, bound, 1))
        if k + 1 < ks.n:
            edges.append(EdgeAttrs((2 * k + 1, 2 * k + 2), 2 * radius, bound, 1))
    p = ks.n
    instance = Instance(tuple(weights), tuple(edges), radius, ks.capacity, p, True)
    threshold = p * heavy + ks.target
    LOGGER.debug("Path gadget: %d nodes, R=%d, B=%d, p=%d, T=%s", 2 * ks.n, radius, ks.capacity, p, threshold)
    return instance, threshold, p


def extract_items(solution: Solution, gadget: str, ks: KnapsackInstance) -> frozenset:
    """
    Read the knapsack set off a gadget solution after moving its facilities to
    the canonical heavy nodes (same upgrades, never less coverage).
    """
    if gadget == STAR:
        instance, threshold = knapsack_to_star(ks)
        canonical = (0,)
        item_of = {k + 1: k for k in range(ks.n)}
    elif gadget == PATH:
        instance, threshold, _ = knapsack_to_path(ks)
        canonical = tuple(range(0, 2 * ks.n, 2))
        item_of = {2 * k + 1: k for k in range(ks.n)}
    else:
        raise ValueError(f"unknown gadget '{gadget}'")

    if solution.value < threshold:
        raise SolutionBelowThreshold(f"value {solution.value} < threshold {threshold}")
    covered, value = coverage(instance, canonical, solution.plan)
    if value < threshold:
        raise SolutionBelowThreshold(f"canonical placement covers {value} < threshold {threshold}")
    chosen = frozenset(item_of[v] for v in covered if v in item_of)
    LOGGER.info("Extracted items %s from %s gadget", sorted(chosen), gadget)
    return chosen


def _knapsack_table(ks: KnapsackInstance) -> list:
    capacity = max(ks.capacity, 0)
    table = [[0] * (capacity + 1) for _ in range(ks.n + 1)]
    for k, (g, b) in enumerate(ks.items, start=1):
        prev, row = table[k - 1], table[k]
        for c in range(capacity + 1):
            row[c] = prev[c]
            if g <= c and prev[c - g] + b > row[c]:
                row[c] = prev[c - g] + b
    return table


def knapsack_dp(ks: KnapsackInstance) -> int:
    """Best total value within capacity (capacity-indexed 0/1 knapsack DP)."""
    return _knapsack_table(ks)[ks.n][max(ks.capacity, 0)]


def knapsack_select(ks: KnapsackInstance) -> tuple[int, frozenset]:
    """Best value and one item set achieving it, by backtracking through the table."""
    table = _knapsack_table(ks)
    c = max(ks.capacity, 0)
    chosen = set()
    for k in range(ks.n, 0, -1):
        if table[k][c] != table[k - 1][c]:
            chosen.add(k - 1)
            c -= ks.items[k - 1][0]
    return table[ks.n][max(ks.capacity, 0)], frozenset(chosen)
