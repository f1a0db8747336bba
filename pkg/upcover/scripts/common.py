"""Helpers shared by the command line scripts."""

import functools
import logging
import sys

from upcover.errors import NotApplicable, UpcoverError, WorkBoundExceeded

LOGGER = logging.getLogger("Upcover.Scripts")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_APPLICABLE = 2


def add_common_arguments(parser):
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output")
    parser.add_argument("--output", default="-", help="Output file, '-' for standard output")


def setup_logging(verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def guarded(func):
    """Map upcover errors to exit codes with a one-line diagnostic on stderr."""

    @functools.wraps(func)
    def wrapper(argv=None):
        try:
            return func(argv)
        except (NotApplicable, WorkBoundExceeded) as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_NOT_APPLICABLE
        except (UpcoverError, OSError) as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_FAILURE

    return wrapper
