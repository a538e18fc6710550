"""Exception types raised by grational."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class EvaluationError(ArithmeticError):
    """A function produced a non-finite value at a quadrature node."""

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node


class SingularMatrixError(ArithmeticError):
    """Exact elimination hit a zero pivot column."""

    def __init__(self, pivot):
        super().__init__(f"collocation matrix is singular at pivot index {pivot}")
        self.pivot = pivot
