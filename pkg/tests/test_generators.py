"""Test suite for the random instance generators"""

# pylint: disable=too-few-public-methods,invalid-name

import pytest

from upcover.errors import GeneratorError
from upcover.formats import format_instance
from upcover.generators import generate
from upcover.model import classify, validate


class TestGenerate:
    """Test cases for generate"""

    def test_deterministic(self):
        """Equal arguments give byte-identical instance files"""
        assert format_instance(generate("tree", 7, 1)) == format_instance(generate("tree", 7, 1))
        assert format_instance(generate("tree", 7, 1)) != format_instance(generate("tree", 7, 2))

    def test_valid_and_shaped(self):
        """Every shape yields valid integer instances of the right topology"""
        expected = {"star": {"star"}, "path": {"path", "star"}, "tree": {"star", "path", "tree"}}
        for shape, classes in expected.items():
            for seed in range(30):
                instance = generate(shape, 1 + seed % 9, seed)
                assert validate(instance) == [], (shape, seed)
                assert instance.integer_flag
                assert classify(instance) in classes, (shape, seed)

    def test_graph_has_chords(self):
        """The graph shape adds edges on top of a spanning tree"""
        instance = generate("graph", 6, 3, extra_edges=2)
        assert instance.m == 7
        assert classify(instance) == "general"
        assert validate(instance) == []

    def test_uniform_weights(self):
        """All weights equal on request"""
        instance = generate("star", 5, 0, uniform_weights=True)
        assert instance.is_uniform_weight
        assert instance.weights[0] >= 1

    def test_normalized(self):
        """Bounds never exceed what the budget pays for"""
        for seed in range(30):
            instance = generate("tree", 6, seed)
            for e in instance.edges:
                assert e.bound <= instance.budget // e.cost
                assert e.bound < e.length

    def test_ranges(self):
        """Parameters stay within the requested maxima"""
        for seed in range(20):
            instance = generate("path", 5, seed, max_length=2, max_cost=1, max_radius=1, max_budget=0, max_weight=1)
            assert instance.radius == 1
            assert instance.budget == 0
            assert all(e.length <= 2 and e.cost == 1 and e.bound == 0 for e in instance.edges)
            assert all(w in (0, 1) for w in instance.weights)

    def test_facilities(self):
        """The facility count is carried into the instance"""
        assert generate("tree", 5, 0, facilities=3).facilities == 3

    def test_infeasible_ranges(self):
        """Unknown shapes and empty ranges raise GeneratorError"""
        cases = [
            ("ring", 4, {}),
            ("tree", 0, {}),
            ("tree", 4, {"max_length": 0}),
            ("tree", 4, {"max_budget": -1}),
            ("tree", 4, {"facilities": 5}),
        ]
        for shape, n, options in cases:
            with pytest.raises(GeneratorError):
                generate(shape, n, 0, **options)
