"""Exact uniform-weight solvers on star networks."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from upcover.errors import FacilityCountError, NonUniformWeights, NotAStar
from upcover.model import EdgeAttrs, Instance, Solution, UpgradePlan, require_valid

LOGGER = logging.getLogger("Upcover.Star")


@dataclass(frozen=True)
class StarDecomposition:
    """Center node and its (satellite, edge) pairs in node id order."""

    center: int
    satellites: tuple


@dataclass(frozen=True)
class SatelliteCost:
    """Satellite that needs an upgrade of ``deficit`` to be covered from the center."""

    node: int
    edge: EdgeAttrs
    deficit: object
    min_cost: object


def decompose_star(instance: Instance) -> StarDecomposition:
    """Find the center; a two-node network uses the lower id, a single node has no satellites."""
    require_valid(instance)
    n = instance.n
    if n == 1:
        return StarDecomposition(0, ())
    if instance.m != n - 1:
        raise NotAStar(f"{instance.m} edges on {n} nodes")
    centers = [v for v in instance.nodes if instance.degree(v) == n - 1]
    if not centers:
        raise NotAStar("no node is adjacent to all others")
    center = centers[0]
    satellites = tuple(sorted((e.other(center), e) for e in instance.adjacency[center]))
    return StarDecomposition(center, satellites)


def satellite_costs(instance: Instance, star: StarDecomposition) -> list[SatelliteCost]:
    """Reachable satellites outside R, sorted by minimal upgrade cost then node id."""
    costs = []
    for node, edge in star.satellites:
        deficit = edge.length - instance.radius
        if instance.within(deficit, 0):
            continue
        if not instance.within(deficit, edge.bound):
            LOGGER.debug("Satellite %d unreachable (deficit %s > bound %s)", node, deficit, edge.bound)
            continue
        costs.append(SatelliteCost(node, edge, deficit, edge.cost * deficit))
    costs.sort(key=lambda s: (s.min_cost, s.node))
    return costs


def _require_uniform(instance: Instance) -> None:
    if not instance.is_uniform_weight:
        raise NonUniformWeights("star solvers need equal node weights")


def _greedy_plan(instance: Instance, star: StarDecomposition) -> UpgradePlan:
    budget = instance.budget
    reductions = {}
    for sat in satellite_costs(instance, star):
        if budget <= 0:
            break
        delta = min(instance.divide(budget, sat.edge.cost), sat.deficit)
        reductions[sat.edge.key] = delta
        budget -= sat.edge.cost * delta
        LOGGER.debug("Satellite %d: delta %s, budget left %s", sat.node, delta, budget)
    return UpgradePlan.of(reductions)


def solve_star_uniform_1(instance: Instance) -> Solution:
    """
    Single facility at the center; upgrade satellites greedily by non-decreasing
    minimal upgrade cost, spending any leftover on the next satellite in line.
    """
    star = decompose_star(instance)
    _require_uniform(instance)
    solution = Solution.evaluate(instance, [star.center], _greedy_plan(instance, star))
    LOGGER.info("Star: center %d covers %d nodes, value %s", star.center, len(solution.covered), solution.value)
    return solution


def solve_star_uniform_p(instance: Instance, p: int | None = None) -> Solution:
    """
    p facilities: the greedy plan for the center, then the remaining p-1
    facilities on the lowest-id uncovered nodes (topped up with the lowest-id
    covered satellites when fewer remain).
    """
    p = instance.facilities if p is None else p
    star = decompose_star(instance)
    _require_uniform(instance)
    if not 1 <= p <= instance.n:
        raise FacilityCountError(f"p={p} not in [1, {instance.n}]")

    plan = _greedy_plan(instance, star)
    base = Solution.evaluate(instance, [star.center], plan)
    uncovered = [v for v in instance.nodes if v not in base.covered]
    extra = uncovered[: p - 1]
    if len(extra) < p - 1:
        spare = [v for v in instance.nodes if v != star.center and v not in extra]
        extra += spare[: p - 1 - len(extra)]
    solution = Solution.evaluate(instance, [star.center, *extra], plan)
    LOGGER.info("Star: %d facilities, value %s", p, solution.value)
    return solution
