"""Shared exception types."""


class FactorWeightError(Exception):
    """Base class for all package errors."""


class MalformedInputError(FactorWeightError):
    """Unparseable graph text (bad edge line, bad graph6 string, ...)."""


class SpecInvalid(FactorWeightError):
    """A degree specification is structurally broken for its graph."""


class PreconditionViolated(FactorWeightError):
    """An operation was called outside its stated precondition."""


class BudgetExceeded(FactorWeightError):
    """An exhaustive search or backtracking run passed its enumeration cap."""


class InternalBoundExceeded(FactorWeightError):
    """A solve that carries a termination guarantee failed to converge.

    Seeing this on a validated preset means a bug in the engine, not a
    property of the input.
    """


class NoMoveAvailable(FactorWeightError):
    """No deficiency-reducing move exists from the current search state."""


class Infeasible(FactorWeightError):
    """A requested construction does not exist (or could not be found).

    ``certified`` is True when infeasibility was proved (exhaustive scan or
    a feasibility criterion), False when the solver merely gave up.
    """

    def __init__(self, reason: str, certified: bool = False):
        super().__init__(reason)
        self.reason = reason
        self.certified = certified


class Obstructed(FactorWeightError):
    """A weighting construction hit a recognized obstruction case."""


class ColoringUnavailable(FactorWeightError):
    """No proper coloring with the requested number of colors was found."""
