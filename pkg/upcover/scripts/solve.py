"""Solve an instance file and write the solution"""

import argparse
import logging

from upcover.bench import run_algorithm
from upcover.constants import UPCOVER_ALGORITHMS
from upcover.errors import UpcoverError
from upcover.formats import dump_text, format_solution, load_instance
from upcover.model import require_valid
from upcover.oracle import GridSpec, solve_exact
from upcover.scripts.common import EXIT_OK, add_common_arguments, guarded, setup_logging
from upcover.tree import INCREMENTAL, REBUILD

LOGGER = logging.getLogger("Upcover.Scripts.Solve")


@guarded
def solve(argv=None):
    """Solve an instance with the chosen (or auto-detected) algorithm."""
    parser = argparse.ArgumentParser(description="Solve an Up-MCLP instance")
    parser.add_argument("instance", help="Instance file")
    parser.add_argument("--algo", default="auto", choices=["auto", *UPCOVER_ALGORITHMS], help="Algorithm")
    parser.add_argument(
        "--step", type=GridSpec.parse, default=GridSpec(), help="Grid step of the brute-force oracle, e.g. 1/2"
    )
    parser.add_argument("--work-bound", type=int, default=None, help="Oracle work bound")
    parser.add_argument("--rebuild", action="store_true", help="Tree solver: rebuild the binary tree per root")
    parser.add_argument("--verify", action="store_true", help="Cross-check the value with the oracle")
    add_common_arguments(parser)
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    instance = load_instance(args.instance)
    require_valid(instance)
    grid = args.step
    solution = run_algorithm(
        instance,
        args.algo,
        grid=grid,
        work_bound=args.work_bound,
        tree_mode=REBUILD if args.rebuild else INCREMENTAL,
    )
    dump_text(format_solution(solution), args.output)

    if args.verify:
        try:
            reference = solve_exact(instance, grid=grid, work_bound=args.work_bound)
        except UpcoverError as err:
            LOGGER.warning("Verification skipped: %s", err)
        else:
            agree = reference.value == solution.value
            level = logging.INFO if agree else logging.ERROR
            LOGGER.log(level, "Oracle value %s, solver value %s", reference.value, solution.value)
            print(f"# verified: {'yes' if agree else 'NO'}")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(solve())
