"""Exact solvers for the upgrading maximal covering location problem."""

# -*- coding: utf-8 -*-
# region Imports
from __future__ import annotations

import logging

from upcover.bench import detect_algorithm, run_algorithm  # noqa: F401
from upcover.errors import UpcoverError  # noqa: F401
from upcover.formats import load_instance, parse_instance  # noqa: F401
from upcover.model import (  # noqa: F401
    EdgeAttrs,
    Instance,
    Solution,
    UpgradePlan,
    classify,
    coverage,
    normalize,
    validate,
)
from upcover.oracle import GridSpec, decide, solve_exact  # noqa: F401

# endregion Imports

LOGGER = logging.getLogger("Upcover")


def solve(instance: Instance, algo: str = "auto", **options) -> Solution:
    """Solve an instance; ``auto`` picks the most specific exact algorithm and falls back as needed."""
    LOGGER.debug("Solving n=%d m=%d p=%d with %s", instance.n, instance.m, instance.facilities, algo)
    return run_algorithm(instance, algo, **options)
