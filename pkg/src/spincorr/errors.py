"""Exception types shared across the package.

Keeping these in one place lets callers catch a single family of
errors instead of fishing for bare ValueError/RuntimeError raised
deep inside numerical routines.
"""


class SpinCorrError(Exception):
    """Base class for all package-specific errors."""


class ArgumentError(SpinCorrError, ValueError):
    """A caller supplied an argument outside its documented domain."""


class ValidationError(SpinCorrError):
    """A computed object failed a physical or structural sanity check."""


class NumericError(SpinCorrError):
    """An iterative numerical routine failed to converge."""


class SingularityError(SpinCorrError):
    """A closed-form expression was evaluated at a removable or true singularity."""
