"""Exceptions raised by the upcover solvers and codecs."""


class UpcoverError(Exception):
    """Base class of all upcover errors."""


class InvalidInstance(UpcoverError):
    """Instance violates the model invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid instance")


class FormatError(UpcoverError):
    """Text input could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotApplicable(UpcoverError):
    """Solver precondition does not hold for this instance."""


class NotAStar(NotApplicable):
    """Network is not a star."""


class NotAPath(NotApplicable):
    """Network is not a path."""


class NotATree(NotApplicable):
    """Network is not a tree."""


class NonUniformWeights(NotApplicable):
    """Solver requires all node weights to be equal."""


class NonIntegerInstance(NotApplicable):
    """Solver requires integer parameters."""


class FacilityCountError(NotApplicable):
    """Number of facilities is outside the range the solver handles."""


class WorkBoundExceeded(UpcoverError):
    """Brute-force enumeration would exceed the configured work bound."""

    def __init__(self, work, bound):
        self.work = work
        self.bound = bound
        super().__init__(f"oracle needs {work} plan evaluations, bound is {bound}")


class SolutionBelowThreshold(UpcoverError):
    """Gadget solution does not reach the decision threshold."""


class GeneratorError(UpcoverError):
    """Generator parameter ranges are infeasible."""
