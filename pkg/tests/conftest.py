"""Shared instances for the test suites"""

import pytest

from upcover.model import EdgeAttrs, Instance


def uniform_tree(weights, pairs, radius, budget, length=2, bound=1, cost=1):
    edges = tuple(EdgeAttrs(pair, length, bound, cost) for pair in pairs)
    return Instance(tuple(weights), edges, radius, budget, 1, True)


@pytest.fixture
def example_tree():
    """Seven-node binary tree, every edge 2/1/1, R=2, B=3; optimum 7 at node 0."""
    pairs = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
    return uniform_tree((1, 1, 2, 1, 2, 1, 2), pairs, 2, 3)


@pytest.fixture
def example_star():
    """Uniform star, center 0, lengths (3, 4, 3), costs (1, 2, 3), R=2, B=3."""
    edges = (
        EdgeAttrs((0, 1), 3, 2, 1),
        EdgeAttrs((0, 2), 4, 3, 2),
        EdgeAttrs((0, 3), 3, 2, 3),
    )
    return Instance((1, 1, 1, 1), edges, 2, 3, 1, True)


@pytest.fixture
def example_path():
    """Path 0-1-2-3 with weights (4, 1, 1, 3), R=2, B=1; optimum 6 at node 1."""
    edges = (
        EdgeAttrs((0, 1), 3, 2, 1),
        EdgeAttrs((1, 2), 2, 1, 1),
        EdgeAttrs((2, 3), 3, 1, 2),
    )
    return Instance((4, 1, 1, 3), edges, 2, 1, 1, True)
