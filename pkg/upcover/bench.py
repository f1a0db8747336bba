"""Solver dispatch and the benchmark harness."""

from __future__ import annotations

import csv
import logging
import time
from dataclasses import dataclass

from upcover.constants import UPCOVER_ALGORITHMS, UPCOVER_CSV_HEADER
from upcover.errors import NotApplicable, UpcoverError
from upcover.model import Instance, Solution, classify
from upcover.oracle import GridSpec, solve_exact
from upcover.path import solve_path_1
from upcover.star import solve_star_uniform_p
from upcover.tree import INCREMENTAL, solve_tree_1

LOGGER = logging.getLogger("Upcover.Bench")

# Specialized algorithm tried first for each topology class, then its fallbacks.
FALLBACKS = {
    "star": ["star", "path", "tree", "brute"],
    "path": ["path", "tree", "brute"],
    "tree": ["tree", "brute"],
    "general": ["brute"],
}


def detect_algorithm(instance: Instance) -> str:
    """Most specific algorithm for the topology; weights and parameters play no part."""
    return FALLBACKS[classify(instance)][0]


def applicable_algorithms(instance: Instance) -> list[str]:
    """Exact algorithms whose preconditions hold (the oracle always applies, work bound permitting)."""
    topology = classify(instance)
    names = []
    if topology == "star" and instance.is_uniform_weight:
        names.append("star")
    if topology != "general" and max((instance.degree(v) for v in instance.nodes), default=0) <= 2:
        if instance.facilities == 1:
            names.append("path")
    if topology != "general" and instance.integer_flag and instance.facilities == 1:
        names.append("tree")
    names.append("brute")
    return names


def run_algorithm(
    instance: Instance,
    algo: str,
    *,
    grid: GridSpec | None = None,
    work_bound: int | None = None,
    tree_mode: str = INCREMENTAL,
) -> Solution:
    """Run one named algorithm; ``auto`` walks the topology's fallback chain."""
    if algo == "auto":
        chain = FALLBACKS[classify(instance)]
        for name in chain[:-1]:
            try:
                return run_algorithm(instance, name, grid=grid, work_bound=work_bound, tree_mode=tree_mode)
            except NotApplicable as err:
                LOGGER.info("%s not applicable (%s), falling back", name, err)
        return run_algorithm(instance, chain[-1], grid=grid, work_bound=work_bound, tree_mode=tree_mode)
    if algo == "star":
        return solve_star_uniform_p(instance)
    if algo == "path":
        return solve_path_1(instance)
    if algo == "tree":
        return solve_tree_1(instance, tree_mode)
    if algo == "brute":
        return solve_exact(instance, grid=grid, work_bound=work_bound)
    raise ValueError(f"unknown algorithm '{algo}', expected auto or one of {UPCOVER_ALGORITHMS}")


@dataclass(frozen=True)
class RunRecord:
    """One benchmark row; ``verified`` means the oracle ran and agreed."""

    instance: str
    algo: str
    n: int
    m: int
    p: int
    radius: object
    budget: object
    value: object
    usec: int
    verified: bool

    def row(self) -> list:
        value = "" if self.value is None else self.value
        return [
            self.instance,
            self.algo,
            self.n,
            self.m,
            self.p,
            self.radius,
            self.budget,
            value,
            self.usec,
            int(self.verified),
        ]


def _oracle_value(instance: Instance, work_bound: int | None):
    try:
        return solve_exact(instance, work_bound=work_bound).value
    except UpcoverError as err:
        LOGGER.info("Oracle skipped: %s", err)
        return None


def run_bench(instances, algos, verify: bool = False, work_bound: int | None = None) -> list[RunRecord]:
    """
    One record per (instance, algorithm), sorted by (instance, algo). A failing
    solver yields a row with an empty value instead of stopping the batch.
    """
    records = []
    for name, instance in instances:
        reference = _oracle_value(instance, work_bound) if verify else None
        for algo in algos:
            start = time.perf_counter_ns()
            try:
                value = run_algorithm(instance, algo, work_bound=work_bound).value
            except UpcoverError as err:
                LOGGER.warning("%s on %s failed: %s", algo, name, err)
                value = None
            usec = (time.perf_counter_ns() - start) // 1000
            verified = reference is not None and value is not None and value == reference
            records.append(
                RunRecord(
                    name, algo, instance.n, instance.m, instance.facilities, instance.radius, instance.budget,
                    value, usec, verified,
                )
            )
            LOGGER.debug("%s %s: value %s in %d us", name, algo, value, usec)
    records.sort(key=lambda r: (r.instance, r.algo))
    return records


def write_csv(records, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(UPCOVER_CSV_HEADER)
    for record in records:
        writer.writerow(record.row())
