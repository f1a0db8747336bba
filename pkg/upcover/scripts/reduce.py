"""Build a KNAPSACK gadget instance"""

import argparse
import logging
from pathlib import Path

from upcover.formats import dump_text, format_instance, parse_knapsack
from upcover.reductions import PATH, STAR, knapsack_to_path, knapsack_to_star
from upcover.scripts.common import EXIT_OK, add_common_arguments, guarded, setup_logging

LOGGER = logging.getLogger("Upcover.Scripts.Reduce")


@guarded
def reduce(argv=None):  # pylint: disable=redefined-builtin
    """Turn a knapsack file into a star or path gadget; the threshold goes into a header comment."""
    parser = argparse.ArgumentParser(description="Reduce KNAPSACK to a covering instance")
    parser.add_argument("knapsack", help="Knapsack file: 'n K U' then n lines 'g b'")
    parser.add_argument("--from", dest="source", default="knapsack", choices=["knapsack"], help="Source problem")
    parser.add_argument("--to", dest="target", required=True, choices=[STAR, PATH], help="Gadget network")
    add_common_arguments(parser)
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    ks = parse_knapsack(Path(args.knapsack).read_text(encoding="utf-8"))
    if args.target == STAR:
        instance, threshold = knapsack_to_star(ks)
        p = 1
    else:
        instance, threshold, p = knapsack_to_path(ks)
    LOGGER.info("%s gadget: threshold %s, p %d", args.target, threshold, p)
    comment = f"knapsack gadget: to={args.target} threshold={threshold} p={p}"
    dump_text(format_instance(instance, comment), args.output)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(reduce())
