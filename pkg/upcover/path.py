"""Single-facility exact solver on path networks."""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass

import networkx as nx

from upcover.errors import FacilityCountError, NotAPath, NotATree
from upcover.model import Instance, Solution, UpgradePlan, classify, require_valid

LOGGER = logging.getLogger("Upcover.Path")

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class PathLayout:
    """Node order from the left endpoint (the lower-id one) to the right, and the facility node."""

    order: tuple
    root: int

    @classmethod
    def of(cls, instance: Instance, root: int = 0) -> PathLayout:
        return cls(path_order(instance), root)

    @property
    def position(self) -> int:
        return self.order.index(self.root)

    def side(self, instance: Instance, side: str) -> tuple[list, list]:
        """Nodes and edges of one side, numbered outward from the root."""
        pos = self.position
        if side == LEFT:
            nodes = list(reversed(self.order[:pos]))
        elif side == RIGHT:
            nodes = list(self.order[pos + 1 :])
        else:
            raise ValueError(f"unknown side '{side}'")
        prev = [self.root, *nodes[:-1]]
        return nodes, [instance.edge(a, b) for a, b in zip(prev, nodes)]


def path_order(instance: Instance) -> tuple:
    """Nodes from one endpoint to the other, starting at the lower-id endpoint."""
    require_valid(instance)
    if instance.n == 1:
        return (0,)
    if classify(instance) not in ("path", "star") or any(instance.degree(v) > 2 for v in instance.nodes):
        raise NotAPath("network is not a path")
    start = min(v for v in instance.nodes if instance.degree(v) == 1)
    order = [start]
    prev = None
    while len(order) < instance.n:
        nxt = next(e.other(order[-1]) for e in instance.adjacency[order[-1]] if e.other(order[-1]) != prev)
        prev = order[-1]
        order.append(nxt)
    return tuple(order)


@dataclass(frozen=True)
class ReachCostTable:
    """
    Minimal budgets B_q to cover the q-th node of one side, q = 0 being the root.

    Entries stop at the first node that is unreachable or costs more than B.
    ``plans[q]`` is the greedy upgrade achieving ``costs[q]``; ``reach[q]`` is
    the covered weight of nodes 1..q.
    """

    side: str
    nodes: tuple
    costs: tuple
    plans: tuple
    reach: tuple


def min_cover_cost(instance: Instance, ranked: list, excess):
    """
    Cheapest way to shorten edges by a total of ``excess``: fractional knapsack
    over ``ranked`` (sorted by cost). Returns (cost, reductions) or None.
    """
    if instance.within(excess, 0):
        return 0, {}
    remaining = excess
    cost = 0
    reductions = {}
    for _, _, edge in ranked:
        take = min(remaining, edge.bound)
        if take > 0:
            reductions[edge.key] = take
            cost += edge.cost * take
            remaining -= take
        if instance.within(remaining, 0):
            return cost, reductions
    return None


def reach_costs(layout: PathLayout, instance: Instance, side: str) -> ReachCostTable:
    """Build B_q outward with an incrementally sorted edge list."""
    nodes, edges = layout.side(instance, side)
    ranked = []
    dist = 0
    table_nodes, costs, plans, reach = [layout.root], [0], [UpgradePlan()], [0]
    for q, (node, edge) in enumerate(zip(nodes, edges), start=1):
        dist += edge.length
        bisect.insort(ranked, (edge.cost, q, edge))
        found = min_cover_cost(instance, ranked, dist - instance.radius)
        if found is None:
            LOGGER.debug("%s side of %d: node %d unreachable", side, layout.root, node)
            break
        cost, reductions = found
        if not instance.within(cost, instance.budget):
            LOGGER.debug("%s side of %d: node %d costs %s > B", side, layout.root, node, cost)
            break
        table_nodes.append(node)
        costs.append(cost)
        plans.append(UpgradePlan.of(reductions))
        reach.append(reach[-1] + instance.weights[node])
    return ReachCostTable(side, tuple(table_nodes), tuple(costs), tuple(plans), tuple(reach))


def _best_split(instance: Instance, left: ReachCostTable, right: ReachCostTable):
    """Walk q from the far left inward; k only moves right as the right budget grows."""
    best = None
    k = 0
    for q in range(len(left.costs) - 1, -1, -1):
        budget_right = instance.budget - left.costs[q]
        while k + 1 < len(right.costs) and instance.within(right.costs[k + 1], budget_right):
            k += 1
        value = left.reach[q] + right.reach[k]
        if best is None or value > best[0]:
            best = (value, q, k)
    return best


def solve_path_1(instance: Instance) -> Solution:
    """Try every facility node, combine the two reach-cost tables, keep the best."""
    if instance.facilities != 1:
        raise FacilityCountError("path solver handles a single facility")
    order = path_order(instance)
    best = None
    for root in instance.nodes:
        layout = PathLayout(order, root)
        left = reach_costs(layout, instance, LEFT)
        right = reach_costs(layout, instance, RIGHT)
        value, q, k = _best_split(instance, left, right)
        value += instance.weights[root]
        LOGGER.debug("Root %d: value %s (left q=%d, right k=%d)", root, value, q, k)
        if best is None or value > best[0]:
            best = (value, root, left.plans[q].merge(right.plans[k]))
    value, root, plan = best
    solution = Solution.evaluate(instance, [root], plan)
    LOGGER.info("Path: facility %d, value %s", root, solution.value)
    return solution


def reach_cost(instance: Instance, source: int, target: int):
    """
    Minimal budget bringing target within R of source on a tree (unique path),
    or None when no plan does.
    """
    if classify(instance) == "general":
        raise NotATree("reach costs need a unique path")
    route = nx.shortest_path(instance.graph(), source, target)
    ranked = sorted(
        (instance.edge(a, b).cost, q, instance.edge(a, b)) for q, (a, b) in enumerate(zip(route, route[1:]))
    )
    excess = sum(r[2].length for r in ranked) - instance.radius
    found = min_cover_cost(instance, ranked, excess)
    return None if found is None else found[0]
