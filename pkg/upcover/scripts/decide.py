"""Answer the decision version for an instance file"""

import argparse

from upcover.formats import load_instance, parse_number
from upcover.oracle import GridSpec, decide as _decide
from upcover.scripts.common import EXIT_OK, add_common_arguments, guarded, setup_logging


@guarded
def decide(argv=None):
    """Print 'true' when some solution covers at least the threshold weight."""
    parser = argparse.ArgumentParser(description="Decide whether an Up-MCLP instance reaches a threshold")
    parser.add_argument("instance", help="Instance file")
    parser.add_argument("--threshold", required=True, help="Weight threshold T")
    parser.add_argument("-p", type=int, default=None, help="Number of facilities (default: from the instance)")
    parser.add_argument("--step", type=GridSpec.parse, default=GridSpec(), help="Grid step of the oracle")
    parser.add_argument("--work-bound", type=int, default=None, help="Oracle work bound")
    add_common_arguments(parser)
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    instance = load_instance(args.instance)
    answer = _decide(instance, args.p, parse_number(args.threshold), args.step, args.work_bound)
    print("true" if answer else "false")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(decide())
