"""Exception hierarchy shared by all lrhorn modules.

Input/shape problems raise ``InputError`` subclasses (CLI exit code 2);
sweeps that refuse to run raise ``BudgetExceededError`` (exit code 3).
"""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class RTooSmallError(InputError):
    """Requested set size is smaller than the number of nonzero parts."""


class SizeMismatchError(InputError):
    """Paired index sets or sequences must have equal length."""


class NotDominoDecomposableError(InputError):
    """Shape has a nonempty 2-core, so it cannot be tiled by dominoes."""


class PartsTooSmallError(InputError):
    """Padding length is below the number of nonzero parts."""


class OddLengthError(InputError):
    """Sequence must have even length."""


class NotSortedError(InputError):
    """Sequence must be weakly decreasing."""


class DoesNotFitBoxError(InputError):
    """Partition exceeds the given rectangle."""


class BadShapeError(InputError):
    """Numeric sequence fails a length, ordering, or sign requirement."""


class TooLargeForFullModeError(InputError):
    """Full inequality sweep requested beyond its hard size cap."""


class HornViolatedError(InputError):
    """Triple fails the Horn inequalities required as a precondition."""


class BadColoringError(InputError):
    """Coloring does not use every color the required number of times."""


class BadTError(InputError):
    """Mixing parameter must lie in [0, 1]."""


class DimensionMismatchError(InputError):
    """Matrix blocks are not conformable."""


class InvalidInputError(InputError):
    """Object fails its structural validation."""


class NoConvergenceError(RuntimeError):
    """Iterative eigensolver exceeded its sweep budget."""


class NonTerminationError(RuntimeError):
    """Fixed-point iteration exceeded its step budget."""


class DecompositionError(RuntimeError):
    """Internal guarantee of the decomposition recursion failed."""


class BudgetExceededError(Exception):
    """Requested sweep exceeds the desk-scale budget; refuse to run."""
