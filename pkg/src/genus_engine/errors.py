"""Exceptions raised when a computed object falsifies an expected structure."""


class StructuralError(ArithmeticError):
    """A structural invariant (divisibility, pole order, vanishing) failed."""


class ResonanceError(StructuralError):
    """An integrand that should be free of ``u**-1`` terms was not."""

    def __init__(self, message: str, coefficient=None):
        super().__init__(message)
        self.coefficient = coefficient


class VanishingLemmaError(StructuralError):
    """A low-order coefficient of a w-derivative expansion was nonzero."""


class FitError(StructuralError):
    """No rational ansatz within the search caps satisfied the equation."""
