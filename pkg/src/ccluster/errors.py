"""Exception types shared across the solver suite."""


class CClusterError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CClusterError, ValueError):
    """Malformed graph, colouring, or file content."""


class UnsupportedInstanceError(CClusterError, ValueError):
    """Instance does not meet the requirements of the chosen engine."""


class PreconditionError(CClusterError, ValueError):
    """A documented operation precondition was violated."""


class SizeLimitError(CClusterError, ValueError):
    """Exhaustive search refused: the search space exceeds the safety bound."""


class ParameterError(CClusterError, ValueError):
    """Parameter out of range, or derived budget too large to execute."""


class ReductionInapplicableError(CClusterError, ValueError):
    """Hardness gadget cannot be built for this source graph."""
