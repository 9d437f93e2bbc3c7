from __future__ import annotations
from typing import Any


class FakeQuadricError(Exception):
    """Base class for all errors raised by the divisor toolkit."""


class ModelMismatchError(FakeQuadricError, ValueError):
    """Raised when an operation is called with the wrong lattice type."""


class PreconditionError(FakeQuadricError, ValueError):
    """Raised when the arguments of an operation violate its precondition."""


class ClassArgumentError(FakeQuadricError, ValueError):
    """Raised when a divisor class argument such as "3,-1" cannot be parsed."""


class ConsistencyFault(FakeQuadricError, RuntimeError):
    """
    Raised when a closed-form formula disagrees with the generic
    Riemann-Roch or adjunction evaluation for the same class.
    """

    def __init__(self, quantity: str, closed_form: Any, generic: Any, detail: str = ""):
        self.quantity = quantity
        self.closed_form = closed_form
        self.generic = generic
        self.detail = detail
        message = f"{quantity}: closed form gives {closed_form}, generic formula gives {generic}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
