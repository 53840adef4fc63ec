"""Error types shared across the package.

Invalid arguments raise ValueError / KeyError as usual; these two cover the
cases the callers are expected to catch and react to.
"""


class ResourceLimitError(RuntimeError):
    """A configurable size cap would be exceeded (not a wrong answer)."""


class NumericError(RuntimeError):
    """A floating-point routine could not certify its tolerance."""


class InvariantViolation(AssertionError):
    """A theorem the library relies on failed on concrete data (a bug,
    or corrupted input); carries a witness for reproduction."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
