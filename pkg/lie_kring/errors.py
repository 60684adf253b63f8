class LieKringError(Exception):
    """Base class for all engine errors."""


class DimensionMismatchError(LieKringError, ValueError):
    """Characters or maps with incompatible ambient dimensions."""


class EffectivenessError(LieKringError, ValueError):
    """An operation that requires an effective character got a negative multiplicity."""


class IntegralityError(LieKringError, ArithmeticError):
    """A quantity that must be an integer was not. Indicates a bug."""


class DomainError(LieKringError, ValueError):
    """Weight outside the dominant chamber where a dominant weight is required."""


class UnsupportedScaleError(LieKringError):
    """Computation is too large for the orbit based approach and was not enabled."""


class InvarianceError(LieKringError, ValueError):
    """Character is not invariant under the Weyl group."""


class NonTerminationError(LieKringError, RuntimeError):
    """An iterative procedure exceeded its iteration bound."""


class ClassificationError(LieKringError, ValueError):
    """A weight did not fall into any of the expected orbit types."""


class DerivationError(LieKringError):
    """A relation could not be solved over Z[t]."""


class InconclusiveError(LieKringError):
    """Lattice truncation did not stabilize."""

    def __init__(self, message: str, diagnostics: dict):
        super().__init__(f"{message}: {diagnostics}")
        self.diagnostics = diagnostics
