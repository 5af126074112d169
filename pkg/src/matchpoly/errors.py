"""Exception taxonomy.

Every error raised by this package derives from MatchpolyError and carries an
exit code for the command line front end:

    2  malformed input (files, flags, graph text)
    3  violated precondition (bad graph shape, bad weights, bad boundary)
    4  resource exhaustion (node budgets, precision ceilings, layout retries)
    5  a verification that was supposed to hold did not
"""


class MatchpolyError(Exception):
    exit_code = 1


class InputError(MatchpolyError):
    """Malformed input text or arguments."""

    exit_code = 2


class PreconditionError(MatchpolyError):
    """Structurally valid input that violates a documented precondition."""

    exit_code = 3


class ResourceError(MatchpolyError):
    """A configured budget or ceiling was exhausted before completion."""

    exit_code = 4


class VerificationError(MatchpolyError):
    """An identity, cross-check, or certification failed."""

    exit_code = 5


# -- parse --------------------------------------------------------------


class GraphFormatError(InputError):
    pass


# -- preconditions ------------------------------------------------------


class OddCycle(PreconditionError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("graph is not bipartite, odd cycle: " + " ".join(self.cycle))


class NotBipartite(PreconditionError):
    pass


class DegenerateDrawing(PreconditionError):
    def __init__(self, kind, witness):
        self.kind = kind
        self.witness = witness
        super().__init__(f"degenerate drawing ({kind}): {witness}")


class BadBoundary(PreconditionError):
    pass


class UnknownTag(PreconditionError):
    pass


class UnassignedSymbol(PreconditionError):
    pass


class DuplicateNode(PreconditionError):
    pass


class NonDivisibleRing(PreconditionError):
    pass


class DivisorContainsZero(PreconditionError):
    pass


class BallContainsZero(PreconditionError):
    pass


# -- resources ----------------------------------------------------------


class TooLargeForOracle(ResourceError):
    pass


class ResourceBudgetExceeded(ResourceError):
    pass


class LayoutFailure(ResourceError):
    pass


class InsufficientPrecision(ResourceError):
    pass


# -- verification -------------------------------------------------------


class VerificationFailed(VerificationError):
    pass


class NotAnInteger(VerificationError):
    pass


class OrientationConflict(VerificationError):
    """Two-coloring of a rewired instance disagreed with the gadget wiring."""
