"""Exception hierarchy shared by all modules."""


class NRBoundsError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(NRBoundsError, ValueError):
    """Input matrices are not square or do not have matching sizes."""


class DomainError(NRBoundsError, ValueError):
    """A spectrum falls outside the domain of a scalar function."""


class AdmissibilityError(NRBoundsError, ValueError):
    """A function or parameter does not satisfy the hypotheses of a chain."""


class NormalizationError(NRBoundsError, ValueError):
    """A vector that must have unit length does not."""


class EvaluationError(NRBoundsError, RuntimeError):
    """An objective returned a non-finite value."""


class ConfigError(NRBoundsError, ValueError):
    """A suite configuration failed validation."""


class ConvergenceError(NRBoundsError, RuntimeError):
    """An iterative method hit its iteration cap.

    The last residual is kept on ``residual``.
    """

    def __init__(self, msg, residual):
        super().__init__(msg)
        self.residual = residual
