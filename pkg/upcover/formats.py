"""Line-oriented text formats for instances, solutions and knapsack inputs."""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path

from upcover.constants import (
    UPCOVER_COMMENT,
    UPCOVER_INSTANCE_MAGIC,
    UPCOVER_INSTANCE_VERSION,
)
from upcover.errors import FormatError
from upcover.model import EdgeAttrs, Instance, Solution, UpgradePlan, coverage, edge_key, simplify
from upcover.reductions import KnapsackInstance

LOGGER = logging.getLogger("Upcover.Formats")


def parse_number(token: str, line: int | None = None):
    """int, ``a/b`` fraction or float."""
    try:
        if "/" in token:
            return simplify(Fraction(token))
        try:
            return int(token)
        except ValueError:
            return float(token)
    except (ValueError, ZeroDivisionError) as err:
        raise FormatError(f"not a number: '{token}'", line) from err


def format_number(value) -> str:
    if isinstance(value, Fraction):
        value = simplify(value)
        if isinstance(value, Fraction):
            return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _records(text: str):
    """Yield (line number, tokens) for every non-empty line, comments removed."""
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split(UPCOVER_COMMENT, 1)[0].split()
        if content:
            yield number, content


def _expect(records, count, what):
    try:
        number, tokens = next(records)
    except StopIteration as err:
        raise FormatError(f"unexpected end of input, expected {what}") from err
    if len(tokens) != count:
        raise FormatError(f"expected {count} fields for {what}, got {len(tokens)}", number)
    return number, tokens


def _integer(token, line):
    value = parse_number(token, line)
    if not isinstance(value, int):
        raise FormatError(f"expected an integer, got '{token}'", line)
    return value


def _trailing(records, what):
    for number, _ in records:
        raise FormatError(f"unexpected content after {what}", number)


def parse_instance(text: str) -> Instance:
    """Parse the ``upmclp 1`` instance format."""
    records = _records(text)
    number, tokens = _expect(records, 2, "header")
    if tokens[0] != UPCOVER_INSTANCE_MAGIC:
        raise FormatError(f"bad magic '{tokens[0]}'", number)
    if _integer(tokens[1], number) != UPCOVER_INSTANCE_VERSION:
        raise FormatError(f"unsupported version {tokens[1]}", number)

    number, tokens = _expect(records, 6, "sizes line 'n m p R B I'")
    n, m, p = (_integer(t, number) for t in tokens[:3])
    radius, budget = (parse_number(t, number) for t in tokens[3:5])
    flag = _integer(tokens[5], number)
    if flag not in (0, 1):
        raise FormatError("integer flag must be 0 or 1", number)

    weights = [None] * n
    for _ in range(n):
        number, tokens = _expect(records, 2, "node line 'id weight'")
        node = _integer(tokens[0], number)
        if not 0 <= node < n or weights[node] is not None:
            raise FormatError(f"bad or repeated node id {node}", number)
        weights[node] = parse_number(tokens[1], number)

    edges = []
    for _ in range(m):
        number, tokens = _expect(records, 5, "edge line 'i j length bound cost'")
        i, j = (_integer(t, number) for t in tokens[:2])
        length, bound, cost = (parse_number(t, number) for t in tokens[2:])
        edges.append(EdgeAttrs((i, j), length, bound, cost))
    _trailing(records, "edges")

    return Instance(tuple(weights), tuple(edges), radius, budget, p, bool(flag))


def format_instance(instance: Instance, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"{UPCOVER_COMMENT} {row}" for row in comment.splitlines())
    lines.append(f"{UPCOVER_INSTANCE_MAGIC} {UPCOVER_INSTANCE_VERSION}")
    lines.append(
        f"{instance.n} {instance.m} {instance.facilities} {format_number(instance.radius)} "
        f"{format_number(instance.budget)} {int(instance.integer_flag)}"
    )
    lines.extend(f"{v} {format_number(w)}" for v, w in enumerate(instance.weights))
    for e in instance.edges:
        i, j = e.endpoints
        lines.append(f"{i} {j} {format_number(e.length)} {format_number(e.bound)} {format_number(e.cost)}")
    return "\n".join(lines) + "\n"


def format_solution(solution: Solution) -> str:
    lines = [format_number(solution.value)]
    lines.append("facilities: " + " ".join(str(x) for x in solution.facilities))
    for (i, j), delta in solution.plan.reductions:
        lines.append(f"upgrade {i} {j} {format_number(delta)}")
    return "\n".join(lines) + "\n"


def parse_solution(text: str, instance: Instance | None = None) -> Solution:
    """
    Parse a solution file.

    With an instance the covered set is recomputed; the stored value is kept
    as read so that ``Solution.verify`` can compare the two.
    """
    records = _records(text)
    number, tokens = _expect(records, 1, "value line")
    value = parse_number(tokens[0], number)

    try:
        number, tokens = next(records)
    except StopIteration as err:
        raise FormatError("missing facilities line") from err
    if tokens[0] != "facilities:":
        raise FormatError("expected 'facilities:'", number)
    facilities = tuple(sorted(_integer(t, number) for t in tokens[1:]))

    reductions = {}
    for number, tokens in records:
        if tokens[0] != "upgrade" or len(tokens) != 4:
            raise FormatError("expected 'upgrade i j delta'", number)
        key = edge_key(_integer(tokens[1], number), _integer(tokens[2], number))
        if key in reductions:
            raise FormatError(f"repeated upgrade for edge {key}", number)
        reductions[key] = parse_number(tokens[3], number)
    plan = UpgradePlan.of(reductions)

    covered = frozenset()
    if instance is not None and facilities:
        covered, _ = coverage(instance, facilities, plan)
    return Solution(facilities, plan, covered, value)


def parse_knapsack(text: str) -> KnapsackInstance:
    """Parse 'n K U' followed by n lines 'g_i b_i'."""
    records = _records(text)
    number, tokens = _expect(records, 3, "knapsack header 'n K U'")
    n, capacity = (_integer(t, number) for t in tokens[:2])
    target = parse_number(tokens[2], number)
    items = []
    for _ in range(n):
        number, tokens = _expect(records, 2, "item line 'g b'")
        items.append(tuple(_integer(t, number) for t in tokens))
    _trailing(records, "items")
    return KnapsackInstance(tuple(items), capacity, target)


def format_knapsack(ks: KnapsackInstance) -> str:
    lines = [f"{ks.n} {ks.capacity} {format_number(ks.target)}"]
    lines.extend(f"{g} {b}" for g, b in ks.items)
    return "\n".join(lines) + "\n"


def load_instance(path) -> Instance:
    LOGGER.debug("Reading instance %s", path)
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def dump_text(text: str, path) -> None:
    """Write text to a file, or to standard output for ``-``."""
    if path in (None, "-"):
        print(text, end="")
        return
    Path(path).write_text(text, encoding="utf-8")
    LOGGER.debug("Wrote %s", path)
