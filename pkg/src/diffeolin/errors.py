"""Exception hierarchy.  Every library error is a ``DiffeoError``."""


class DiffeoError(ValueError):
    pass


class DimensionMismatchError(DiffeoError):
    pass


class NotSymmetricError(DiffeoError):
    pass


class NoSolutionError(DiffeoError):
    pass


class AmbiguousSolutionError(DiffeoError):
    pass


class NoConvergenceError(DiffeoError):
    pass


class InvalidSpaceError(DiffeoError):
    """Raised when a space description fails validation."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class NotSmoothError(DiffeoError):
    pass


class NotPseudoMetricError(DiffeoError):
    pass


class NotDirectSumError(DiffeoError):
    pass


class NotPositiveDefiniteError(DiffeoError):
    pass
