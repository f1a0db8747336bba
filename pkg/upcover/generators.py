"""Seeded random instance generators.

Random numbers come from ``random.Random(seed)`` (MT19937) and are drawn in a
fixed order: radius, budget, topology, node weights by id, then for each edge
in edge order its length, bound and cost. Equal arguments therefore give
byte-identical instance files on every platform.
"""

from __future__ import annotations

import logging
import random

from upcover.constants import (
    UPCOVER_GEN_MAX_BUDGET,
    UPCOVER_GEN_MAX_COST,
    UPCOVER_GEN_MAX_LENGTH,
    UPCOVER_GEN_MAX_RADIUS,
    UPCOVER_GEN_MAX_WEIGHT,
    UPCOVER_SHAPES,
)
from upcover.errors import GeneratorError
from upcover.model import EdgeAttrs, Instance, edge_key, normalize

LOGGER = logging.getLogger("Upcover.Generators")


def _topology(shape: str, n: int, rng: random.Random, extra_edges: int) -> list:
    if shape == "star":
        return [(0, v) for v in range(1, n)]
    if shape == "path":
        return [(v, v + 1) for v in range(n - 1)]
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    if shape == "graph":
        present = {edge_key(*pair) for pair in pairs}
        missing = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in present]
        pairs += rng.sample(missing, min(extra_edges, len(missing)))
    return pairs


def generate(
    shape: str,
    n: int,
    seed: int = 0,
    *,
    max_length: int = UPCOVER_GEN_MAX_LENGTH,
    max_cost: int = UPCOVER_GEN_MAX_COST,
    max_radius: int = UPCOVER_GEN_MAX_RADIUS,
    max_budget: int = UPCOVER_GEN_MAX_BUDGET,
    max_weight: int = UPCOVER_GEN_MAX_WEIGHT,
    uniform_weights: bool = False,
    facilities: int = 1,
    extra_edges: int = 1,
) -> Instance:
    """
    Random integer instance of the given shape. Bounds are capped by the
    budget (normalization), so the result always passes ``validate``.
    """
    if shape not in UPCOVER_SHAPES:
        raise GeneratorError(f"unknown shape '{shape}', expected one of {UPCOVER_SHAPES}")
    if n < 1:
        raise GeneratorError("n must be at least 1")
    if max_length < 1 or max_cost < 1 or max_radius < 1:
        raise GeneratorError("length, cost and radius ranges need a maximum of at least 1")
    if max_budget < 0 or max_weight < 0:
        raise GeneratorError("budget and weight ranges need a non-negative maximum")
    if not 1 <= facilities <= n:
        raise GeneratorError(f"facilities {facilities} not in [1, {n}]")

    rng = random.Random(seed)
    radius = rng.randint(1, max_radius)
    budget = rng.randint(0, max_budget)
    pairs = _topology(shape, n, rng, extra_edges)
    if uniform_weights:
        weights = (rng.randint(1, max(max_weight, 1)),) * n
    else:
        weights = tuple(rng.randint(0, max_weight) for _ in range(n))
    edges = []
    for pair in pairs:
        length = rng.randint(1, max_length)
        bound = rng.randint(0, length - 1)
        cost = rng.randint(1, max_cost)
        edges.append(EdgeAttrs(pair, length, bound, cost))

    instance = normalize(Instance(weights, tuple(edges), radius, budget, facilities, True))
    LOGGER.debug("Generated %s n=%d seed=%s R=%d B=%d", shape, n, seed, radius, budget)
    return instance
