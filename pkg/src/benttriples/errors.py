"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: usage and input problems
exit 1, violated mathematical preconditions exit 2, documented size caps
exit 3.
"""


class ContextMismatchError(ValueError):
    """An element or polynomial was used with the wrong field context."""


class ConditionError(ValueError):
    """A construction's mathematical precondition does not hold."""


class NotInvertibleError(ValueError):
    """A map is not a permutation, or has no inverse of the requested shape."""


class ResourceLimitError(RuntimeError):
    """The requested size exceeds a documented operating cap."""
