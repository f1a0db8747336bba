"""Validate an instance and report normalization and solver applicability"""

import argparse

from upcover.bench import applicable_algorithms
from upcover.formats import dump_text, format_number, load_instance
from upcover.model import classify, normalize, validate
from upcover.path import reach_cost
from upcover.scripts.common import EXIT_FAILURE, EXIT_OK, add_common_arguments, guarded, setup_logging


def report(instance):
    """Lines of the check report and whether the instance is valid."""
    violations = validate(instance)
    lines = [f"nodes {instance.n}, edges {instance.m}, p {instance.facilities}"]
    if violations:
        lines.append(f"invalid: {len(violations)} violation(s)")
        lines.extend(f"  {v}" for v in violations)
        return lines, False

    lines.append("valid")
    normalized = normalize(instance)
    for before, after in zip(instance.edges, normalized.edges):
        i, j = after.endpoints
        if before.bound != after.bound:
            lines.append(f"  edge ({i}, {j}): bound {format_number(before.bound)} -> {format_number(after.bound)}")
        if after.uncrossable:
            lines.append(f"  edge ({i}, {j}): uncrossable for coverage")
    topology = classify(instance)
    lines.append(f"topology: {topology}")
    lines.append("algorithms: " + " ".join(applicable_algorithms(instance)))
    if topology != "general":
        for source in instance.nodes:
            count = 0
            for target in instance.nodes:
                cost = reach_cost(normalized, source, target)
                if cost is not None and normalized.within(cost, normalized.budget):
                    count += 1
            lines.append(f"  node {source}: {count} node(s) reachable within budget")
    return lines, True


@guarded
def check(argv=None):
    """Print the validation and normalization report."""
    parser = argparse.ArgumentParser(description="Validate and normalize an Up-MCLP instance")
    parser.add_argument("instance", help="Instance file")
    add_common_arguments(parser)
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    lines, valid = report(load_instance(args.instance))
    dump_text("\n".join(lines) + "\n", args.output)
    return EXIT_OK if valid else EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(check())
