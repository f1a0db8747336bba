"""Upcover CLI."""

import argparse
import sys

from upcover.scripts.bench import bench
from upcover.scripts.check import check
from upcover.scripts.decide import decide
from upcover.scripts.gen import gen
from upcover.scripts.reduce import reduce  # pylint: disable=redefined-builtin
from upcover.scripts.solve import solve

COMMANDS = {
    "solve": solve,
    "decide": decide,
    "gen": gen,
    "reduce": reduce,
    "bench": bench,
    "check": check,
}


def main(argv=None) -> int:
    """Entry point to parse CLI arguments."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = argparse.ArgumentParser(
        description="Exact solvers for upgrading maximal covering location",
        usage="""upcover <command> [<args>]
        The supported commands are:
        solve      Solve an instance file and print the solution
        decide     Decide whether some solution reaches a weight threshold
        gen        Generate a seeded random instance
        reduce     Build a star or path instance from a knapsack file
        bench      Run solvers on instances and write CSV rows
        check      Validate an instance and report normalization
        """,
    )
    parser.add_argument("command", help="Subcommand to run")
    # only the command is parsed here, the subcommand parses the rest
    args = parser.parse_args(argv[:1])
    if args.command not in COMMANDS:
        print("Unrecognized command", file=sys.stderr)
        parser.print_help()
        return 1
    return COMMANDS[args.command](argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
