"""Exception types raised across the package."""


class InvalidInputError(ValueError):
    """Malformed vertex labels, dimensions, or parameters."""


class SingularMatrixError(ArithmeticError):
    pass


class HypothesisError(ValueError):
    """A construction was asked for outside the hypotheses that make it valid."""


class IntegrityError(AssertionError):
    """A proven structural law failed on a computed object (indicates a bug)."""


class VerificationError(RuntimeError):
    """A computed facet normal failed exact verification."""
