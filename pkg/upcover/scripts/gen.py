"""Generate a random instance file"""

import argparse

from upcover.constants import (
    UPCOVER_GEN_MAX_BUDGET,
    UPCOVER_GEN_MAX_COST,
    UPCOVER_GEN_MAX_LENGTH,
    UPCOVER_GEN_MAX_RADIUS,
    UPCOVER_GEN_MAX_WEIGHT,
    UPCOVER_SHAPES,
)
from upcover.formats import dump_text, format_instance
from upcover.generators import generate
from upcover.scripts.common import EXIT_OK, add_common_arguments, guarded, setup_logging


def add_generator_arguments(parser):
    parser.add_argument("--max-length", type=int, default=UPCOVER_GEN_MAX_LENGTH, help="Largest edge length")
    parser.add_argument("--max-cost", type=int, default=UPCOVER_GEN_MAX_COST, help="Largest unit upgrade cost")
    parser.add_argument("--max-radius", type=int, default=UPCOVER_GEN_MAX_RADIUS, help="Largest radius R")
    parser.add_argument("--max-budget", type=int, default=UPCOVER_GEN_MAX_BUDGET, help="Largest budget B")
    parser.add_argument("--max-weight", type=int, default=UPCOVER_GEN_MAX_WEIGHT, help="Largest node weight")
    parser.add_argument("--uniform-weights", action="store_true", help="Give every node the same weight")
    parser.add_argument("-p", type=int, default=1, help="Number of facilities")


def generator_options(args):
    return {
        "max_length": args.max_length,
        "max_cost": args.max_cost,
        "max_radius": args.max_radius,
        "max_budget": args.max_budget,
        "max_weight": args.max_weight,
        "uniform_weights": args.uniform_weights,
        "facilities": args.p,
    }


@guarded
def gen(argv=None):
    """Write a seeded random instance."""
    parser = argparse.ArgumentParser(description="Generate a random integer Up-MCLP instance")
    parser.add_argument("--shape", required=True, choices=UPCOVER_SHAPES, help="Network shape")
    parser.add_argument("--n", type=int, required=True, help="Number of nodes")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the random number generator")
    add_generator_arguments(parser)
    add_common_arguments(parser)
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    instance = generate(args.shape, args.n, args.seed, **generator_options(args))
    comment = f"generated: shape={args.shape} n={args.n} seed={args.seed}"
    dump_text(format_instance(instance, comment), args.output)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(gen())
