"""Benchmark solvers and write one CSV row per run"""

import argparse
import io
import logging

from upcover.bench import run_bench, write_csv
from upcover.constants import UPCOVER_ALGORITHMS, UPCOVER_SHAPES
from upcover.formats import dump_text, load_instance
from upcover.generators import generate
from upcover.scripts.common import EXIT_OK, add_common_arguments, guarded, setup_logging
from upcover.scripts.gen import add_generator_arguments, generator_options

LOGGER = logging.getLogger("Upcover.Scripts.Bench")


def _suite(args):
    suite = [(path, load_instance(path)) for path in args.instances]
    if args.shape:
        options = generator_options(args)
        for n in args.sizes:
            for k in range(args.count):
                seed = args.seed + k
                suite.append((f"{args.shape}-n{n:05d}-s{seed}", generate(args.shape, n, seed, **options)))
    return suite


@guarded
def bench(argv=None):
    """Run every algorithm on every instance; failing runs keep an empty value."""
    parser = argparse.ArgumentParser(description="Benchmark Up-MCLP solvers")
    parser.add_argument("instances", nargs="*", help="Instance files")
    parser.add_argument(
        "--algo", action="append", choices=["auto", *UPCOVER_ALGORITHMS], help="Algorithm (repeatable)"
    )
    parser.add_argument("--verify", action="store_true", help="Compare with the oracle where tractable")
    parser.add_argument("--work-bound", type=int, default=None, help="Oracle work bound")
    parser.add_argument("--shape", choices=UPCOVER_SHAPES, help="Generate a suite of this shape")
    parser.add_argument("--sizes", type=int, nargs="+", default=[7], help="Node counts of the generated suite")
    parser.add_argument("--count", type=int, default=1, help="Instances per size")
    parser.add_argument("--seed", type=int, default=0, help="First seed of the generated suite")
    add_generator_arguments(parser)
    add_common_arguments(parser)
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    records = run_bench(_suite(args), args.algo or ["auto"], args.verify, args.work_bound)
    buffer = io.StringIO()
    write_csv(records, buffer)
    dump_text(buffer.getvalue(), args.output)
    LOGGER.info("%d rows written", len(records))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(bench())
