"""Exception hierarchy.

``ValidationError`` covers bad inputs (CLI exit code 2); ``NumericalError``
covers solver failures (exit code 1).
"""


class LowdinError(Exception):
    pass


class ValidationError(LowdinError, ValueError):
    pass


class NumericalError(LowdinError, ArithmeticError):
    pass


class NotHermitian(ValidationError):
    pass


class NotUnitDiagonal(ValidationError):
    pass


class NotPositiveDefinite(ValidationError):
    def __init__(self, lambda_min, eps_pd):
        self.lambda_min = float(lambda_min)
        self.eps_pd = float(eps_pd)
        super().__init__(
            f"smallest eigenvalue {self.lambda_min:.6g} <= eps_pd={self.eps_pd:g}"
        )


class ConvergenceFailure(NumericalError):
    pass


class DimensionMismatch(ValidationError):
    pass


class GramMismatch(ValidationError):
    pass


class ZeroVector(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class OverlapOutOfRange(ValidationError):
    pass


class OverlapOutOfGoldenRange(ValidationError):
    pass


class NotUniformOverlap(ValidationError):
    pass


class NotMaximallyCoherent(ValidationError):
    pass


class InvalidDensity(ValidationError):
    pass


class ZeroEta(ValidationError):
    pass


class EmptyRange(ValidationError):
    pass


class ZeroCoherenceWarning(UserWarning):
    """Forward map sent a superposition state onto a single Löwdin vector."""
