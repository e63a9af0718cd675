"""Exception hierarchy shared by all bchyper modules."""


class BCHyperError(Exception):
    """Base class for every error raised by this package."""


class NullConeError(BCHyperError):
    """Operation needs an invertible bicomplex number but got a zero divisor."""


class BranchCutError(BCHyperError):
    """Principal-branch power evaluated on the negative real cut."""


class PoleError(BCHyperError):
    """Gamma evaluated at (or too close to) a nonpositive integer."""


class DomainError(BCHyperError):
    """Argument lies outside the convergence region of the series."""


class NoConvergenceError(BCHyperError):
    """Series truncation cap was reached before the stop rule triggered."""


class InvalidParamsError(BCHyperError):
    """Parameter vector violates a validity precondition."""


class PreconditionError(BCHyperError):
    """Hypothesis of an integral representation is not satisfied."""


class PositivityError(BCHyperError):
    """Coherent-state parameter function is not a strictly positive hyperbolic number."""


class TruncationError(BCHyperError):
    """Fock-space truncation tail is too large at the configured cutoff."""


class ParamMismatchError(BCHyperError):
    """Two coherent states with different parameter vectors were combined."""


class UsageError(BCHyperError):
    """Command line was syntactically valid but semantically unusable."""
