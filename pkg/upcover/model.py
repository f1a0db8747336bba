"""Instance and solution model, validation, normalization and coverage."""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Number
from typing import Iterable, Mapping

import networkx as nx

from upcover.constants import UPCOVER_FLOAT_TOLERANCE
from upcover.errors import FacilityCountError, InvalidInstance

LOGGER = logging.getLogger("Upcover.Model")

EdgeKey = tuple[int, int]


def edge_key(i: int, j: int) -> EdgeKey:
    """Unordered endpoint pair in canonical (low, high) order."""
    return (i, j) if i <= j else (j, i)


def _is_integer(value) -> bool:
    if isinstance(value, bool):
        return False
    if isinstance(value, int):
        return True
    if isinstance(value, Fraction):
        return value.denominator == 1
    return False


def simplify(value):
    """Turn whole fractions back into plain ints."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


@dataclass(frozen=True)
class EdgeAttrs:
    """Undirected edge with length, upgrade bound and unit upgrade cost."""

    endpoints: EdgeKey
    length: Number
    bound: Number
    cost: Number
    uncrossable: bool = False

    @property
    def key(self) -> EdgeKey:
        return edge_key(*self.endpoints)

    def other(self, node: int) -> int:
        """Endpoint opposite to node."""
        i, j = self.endpoints
        return j if node == i else i


@dataclass(frozen=True)
class Instance:
    """
    Up-MCLP instance: node weights, edges, radius R, budget B and facility count p.

    Node ids are the indices into ``weights``; the order of ``edges`` is the
    file order and is used wherever edges need a canonical order.
    """

    weights: tuple
    edges: tuple
    radius: Number
    budget: Number
    facilities: int = 1
    integer_flag: bool = False

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def nodes(self) -> range:
        return range(self.n)

    @property
    def total_weight(self):
        return sum(self.weights)

    @property
    def is_uniform_weight(self) -> bool:
        return len(set(self.weights)) <= 1

    @cached_property
    def edge_index(self) -> dict:
        return {e.key: e for e in self.edges}

    def edge(self, i: int, j: int) -> EdgeAttrs:
        """Edge attributes for the unordered pair (i, j)."""
        return self.edge_index[edge_key(i, j)]

    @cached_property
    def adjacency(self) -> dict:
        """Node -> list of incident edges, in edge order."""
        adj = {v: [] for v in self.nodes}
        for e in self.edges:
            for v in e.endpoints:
                if v in adj:
                    adj[v].append(e)
        return adj

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def graph(self) -> nx.Graph:
        """Networkx view with ``weight`` on nodes and ``length/bound/cost`` on edges. Shared, do not mutate."""
        return self._graph

    @cached_property
    def _graph(self) -> nx.Graph:
        g = nx.Graph()
        for v, w in enumerate(self.weights):
            g.add_node(v, weight=w)
        for e in self.edges:
            g.add_edge(*e.endpoints, length=e.length, bound=e.bound, cost=e.cost, uncrossable=e.uncrossable)
        return g

    def within(self, value, limit) -> bool:
        """value <= limit, exact for integer instances, with tolerance otherwise."""
        if self.integer_flag:
            return value <= limit
        return value <= limit + UPCOVER_FLOAT_TOLERANCE

    def divide(self, numerator, denominator):
        """Exact quotient on integer instances, float quotient otherwise."""
        if self.integer_flag:
            return simplify(Fraction(numerator) / Fraction(denominator))
        return numerator / denominator


@dataclass(frozen=True)
class UpgradePlan:
    """Edge length reductions, stored as sorted (edge key, delta) pairs with zeros dropped."""

    reductions: tuple = ()

    @classmethod
    def of(cls, mapping: Mapping | None = None) -> UpgradePlan:
        merged = {}
        for key, delta in (mapping or {}).items():
            key = edge_key(*key)
            merged[key] = merged.get(key, 0) + delta
        return cls(tuple(sorted((k, simplify(v)) for k, v in merged.items() if v)))

    def delta(self, key: EdgeKey):
        return self.as_dict().get(edge_key(*key), 0)

    def as_dict(self) -> dict:
        return dict(self.reductions)

    def merge(self, other: UpgradePlan) -> UpgradePlan:
        combined = self.as_dict()
        for key, delta in other.reductions:
            combined[key] = combined.get(key, 0) + delta
        return UpgradePlan.of(combined)

    def cost(self, instance: Instance):
        return sum(instance.edge(*key).cost * delta for key, delta in self.reductions)

    def is_feasible(self, instance: Instance) -> bool:
        for key, delta in self.reductions:
            if key not in instance.edge_index:
                return False
            if delta < 0 or not instance.within(delta, instance.edge_index[key].bound):
                return False
        return instance.within(self.cost(instance), instance.budget)

    def __len__(self):
        return len(self.reductions)


@dataclass(frozen=True)
class Solution:
    """Facility set, upgrade plan, covered nodes and covered weight."""

    facilities: tuple
    plan: UpgradePlan = field(default_factory=UpgradePlan)
    covered: frozenset = frozenset()
    value: Number = 0

    @classmethod
    def evaluate(cls, instance: Instance, facilities: Iterable[int], plan: UpgradePlan) -> Solution:
        """Build a solution whose covered set and value come from ``coverage``."""
        facilities = tuple(sorted(set(facilities)))
        covered, value = coverage(instance, facilities, plan)
        return cls(facilities, plan, covered, value)

    def verify(self, instance: Instance) -> bool:
        """Recompute coverage and compare with the stored covered set and value."""
        if not self.plan.is_feasible(instance):
            LOGGER.debug("Plan %s infeasible", self.plan)
            return False
        covered, value = coverage(instance, self.facilities, self.plan)
        if value != self.value:
            LOGGER.debug("Stored value %s, recomputed %s", self.value, value)
            return False
        return not self.covered or covered == self.covered


def validate(instance: Instance) -> list[str]:
    """Return all invariant violations; an empty list means the instance is valid."""
    violations = []
    if instance.n < 1:
        violations.append("nodes: at least one node required")
    for v, w in enumerate(instance.weights):
        if w < 0:
            violations.append(f"node {v}: weight negative")
    if not instance.radius > 0:
        violations.append("radius: must be positive")
    if instance.budget < 0:
        violations.append("budget: must be non-negative")
    if not 1 <= instance.facilities <= max(instance.n, 1):
        violations.append(f"facilities: {instance.facilities} not in [1, {instance.n}]")

    seen = set()
    for e in instance.edges:
        i, j = e.endpoints
        name = f"edge ({i}, {j})"
        if not (0 <= i < instance.n and 0 <= j < instance.n):
            violations.append(f"{name}: endpoint out of range")
        if i == j:
            violations.append(f"{name}: loop")
        if e.key in seen:
            violations.append(f"{name}: duplicate")
        seen.add(e.key)
        if e.bound < 0:
            violations.append(f"{name}: bound negative")
        if not e.bound < e.length:
            violations.append(f"{name}: bound not < length")
        if not e.cost > 0:
            violations.append(f"{name}: cost not positive")

    if instance.integer_flag:
        for e in instance.edges:
            if not all(_is_integer(x) for x in (e.length, e.bound, e.cost)):
                violations.append(f"edge ({e.endpoints[0]}, {e.endpoints[1]}): non-integer parameter")
        if not _is_integer(instance.radius) or not _is_integer(instance.budget):
            violations.append("radius/budget: non-integer parameter")
        for v, w in enumerate(instance.weights):
            if not _is_integer(w):
                violations.append(f"node {v}: non-integer weight")

    if instance.n >= 1 and not any(v.startswith("edge") and "range" in v for v in violations):
        if not nx.is_connected(instance.graph()):
            violations.append("graph: disconnected")
    return violations


def require_valid(instance: Instance) -> None:
    violations = validate(instance)
    if violations:
        raise InvalidInstance(violations)


def normalize(instance: Instance) -> Instance:
    """
    Cap every upgrade bound at what the budget can pay for and tag edges that
    can never lie on a covering path (reduced length still above R).
    """
    require_valid(instance)
    edges = []
    for e in instance.edges:
        if instance.integer_flag:
            cap = instance.budget // e.cost
        else:
            cap = instance.budget / e.cost
        bound = min(e.bound, cap)
        uncrossable = not instance.within(e.length - bound, instance.radius)
        if bound != e.bound:
            LOGGER.debug("Edge %s: bound %s capped to %s", e.key, e.bound, bound)
        edges.append(dataclasses.replace(e, bound=bound, uncrossable=uncrossable))
    return dataclasses.replace(instance, edges=tuple(edges))


def _reduced_length(plan: UpgradePlan):
    deltas = plan.as_dict()

    def weight(i, j, data):
        return data["length"] - deltas.get(edge_key(i, j), 0)

    return weight


def distance(instance: Instance, plan: UpgradePlan, i: int, j: int):
    """Shortest path length between i and j after applying the plan."""
    if i == j:
        return 0
    return nx.dijkstra_path_length(instance.graph(), i, j, weight=_reduced_length(plan))


def coverage(instance: Instance, facilities: Iterable[int], plan: UpgradePlan) -> tuple[frozenset, Number]:
    """Nodes within R of some facility after the plan, and their total weight."""
    facilities = set(facilities)
    if not facilities:
        raise FacilityCountError("coverage needs at least one facility")
    lengths = nx.multi_source_dijkstra_path_length(instance.graph(), facilities, weight=_reduced_length(plan))
    covered = frozenset(v for v, d in lengths.items() if instance.within(d, instance.radius))
    return covered, sum(instance.weights[v] for v in covered)


def classify(instance: Instance) -> str:
    """Most specific topology class: ``star``, ``path``, ``tree`` or ``general``."""
    n, m = instance.n, instance.m
    if m != n - 1 or not nx.is_connected(instance.graph()):
        return "general"
    if n <= 2:
        return "star"
    degrees = [instance.degree(v) for v in instance.nodes]
    if max(degrees) == n - 1:
        return "star"
    if max(degrees) <= 2:
        return "path"
    return "tree"
