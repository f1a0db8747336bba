"""Exhaustive exact solver for small instances on arbitrary connected networks."""

from __future__ import annotations

import itertools
import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from upcover.constants import (
    UPCOVER_DEFAULT_WORK_BOUND,
    UPCOVER_FLOAT_TOLERANCE,
    UPCOVER_WORK_BOUND_ENV,
)
from upcover.errors import FacilityCountError, WorkBoundExceeded
from upcover.model import Instance, Solution, UpgradePlan, require_valid, simplify

LOGGER = logging.getLogger("Upcover.Oracle")


@dataclass(frozen=True)
class GridSpec:
    """Upgrades are enumerated on the grid {0, step, 2*step, ...}."""

    step: Fraction = Fraction(1)

    def __post_init__(self):
        step = Fraction(self.step)
        if step <= 0:
            raise ValueError(f"grid step must be positive, got {self.step}")
        object.__setattr__(self, "step", step)

    @classmethod
    def parse(cls, text: str) -> GridSpec:
        """Accepts ``1``, ``1/2``, ``0.25``."""
        return cls(Fraction(text))


def resolve_work_bound(bound: int | None = None) -> int:
    """Explicit bound, else the environment override, else the default."""
    if bound is not None:
        return bound
    raw = os.environ.get(UPCOVER_WORK_BOUND_ENV)
    if raw:
        try:
            return int(float(raw))
        except ValueError:
            LOGGER.warning("Ignoring %s='%s': not a number", UPCOVER_WORK_BOUND_ENV, raw)
    return UPCOVER_DEFAULT_WORK_BOUND


class _ScaledNetwork:
    """
    Instance in grid units. Integer instances are multiplied by the step
    denominator so every comparison stays an exact integer comparison.
    """

    def __init__(self, instance: Instance, grid: GridSpec):
        self.instance = instance
        self.grid = grid
        self.exact = instance.integer_flag
        if self.exact:
            scale, unit = grid.step.denominator, grid.step.numerator
            self.lengths = [e.length * scale for e in instance.edges]
            self.radius = instance.radius * scale
            self.budget = instance.budget * scale
            self.tops = [e.bound * scale // unit for e in instance.edges]
        else:
            unit = float(grid.step)
            self.lengths = [float(e.length) for e in instance.edges]
            self.radius = instance.radius
            self.budget = instance.budget
            self.tops = [math.floor(e.bound / unit + UPCOVER_FLOAT_TOLERANCE) for e in instance.edges]
        self.unit = unit
        self.unit_costs = [e.cost * unit for e in instance.edges]

    def within(self, value, limit) -> bool:
        if self.exact:
            return value <= limit
        return value <= limit + UPCOVER_FLOAT_TOLERANCE

    def plans(self):
        """Budget-feasible grid plans as tuples of step counts, in lexicographic order."""
        m = len(self.tops)
        prefix = []

        def walk(k, spent):
            if k == m:
                yield tuple(prefix)
                return
            for t in range(self.tops[k] + 1):
                cost = spent + self.unit_costs[k] * t
                if not self.within(cost, self.budget):
                    break
                prefix.append(t)
                yield from walk(k + 1, cost)
                prefix.pop()

        yield from walk(0, 0)

    def distances(self, plan) -> list:
        """All-pairs shortest paths (Floyd-Warshall) on reduced lengths."""
        n = self.instance.n
        dist = [[math.inf] * n for _ in range(n)]
        for i in range(n):
            dist[i][i] = 0
        for e, length, t in zip(self.instance.edges, self.lengths, plan):
            i, j = e.endpoints
            reduced = length - self.unit * t
            if reduced < dist[i][j]:
                dist[i][j] = dist[j][i] = reduced
        for k in range(n):
            row_k = dist[k]
            for i in range(n):
                dik = dist[i][k]
                if dik == math.inf:
                    continue
                row_i = dist[i]
                for j in range(n):
                    via = dik + row_k[j]
                    if via < row_i[j]:
                        row_i[j] = via
        return dist

    def to_plan(self, plan) -> UpgradePlan:
        reductions = {}
        for e, t in zip(self.instance.edges, plan):
            if t:
                reductions[e.key] = simplify(self.grid.step * t) if self.exact else t * self.unit
        return UpgradePlan.of(reductions)


def _check_work(network: _ScaledNetwork, combos: int, bound: int) -> int:
    limit = bound // combos
    count = sum(1 for _ in itertools.islice(network.plans(), limit + 1))
    if count > limit:
        raise WorkBoundExceeded(count * combos, bound)
    LOGGER.debug("Oracle: %d plans x %d facility sets", count, combos)
    return count


def solve_exact(
    instance: Instance, p: int | None = None, grid: GridSpec | None = None, work_bound: int | None = None
) -> Solution:
    """
    Enumerate every facility set of size p and every budget-feasible grid plan.
    Ties go to the lexicographically smallest facilities, then plan.
    """
    require_valid(instance)
    p = instance.facilities if p is None else p
    if not 1 <= p <= instance.n:
        raise FacilityCountError(f"p={p} not in [1, {instance.n}]")
    grid = grid or GridSpec()
    network = _ScaledNetwork(instance, grid)
    combos = list(itertools.combinations(instance.nodes, p))
    _check_work(network, len(combos), resolve_work_bound(work_bound))

    masses = {}

    def mass(mask):
        if mask not in masses:
            masses[mask] = sum(w for v, w in enumerate(instance.weights) if mask >> v & 1)
        return masses[mask]

    best = None
    for plan in network.plans():
        dist = network.distances(plan)
        reach = [
            sum(1 << i for i, d in enumerate(row) if network.within(d, network.radius)) for row in dist
        ]
        for combo in combos:
            mask = 0
            for x in combo:
                mask |= reach[x]
            value = mass(mask)
            if best is None or value > best[0] or (value == best[0] and (combo, plan) < best[1:]):
                best = (value, combo, plan)

    value, combo, plan = best
    solution = Solution.evaluate(instance, combo, network.to_plan(plan))
    if solution.value != value:
        LOGGER.error("Oracle value %s but coverage gives %s", value, solution.value)
    LOGGER.info("Oracle: p=%d step=%s facilities %s, value %s", p, grid.step, combo, solution.value)
    return solution


def decide(
    instance: Instance,
    p: int | None,
    threshold,
    grid: GridSpec | None = None,
    work_bound: int | None = None,
) -> bool:
    """Is there a solution covering at least ``threshold`` weight?"""
    return solve_exact(instance, p, grid, work_bound).value >= threshold
