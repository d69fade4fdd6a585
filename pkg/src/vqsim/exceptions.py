"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Dimension or length of an input does not match its contract."""


class ValidationError(ValueError):
    """Input violates a structural requirement (non-unitary, non-Hermitian, ...)."""


class CapacityError(ValueError):
    """Problem size exceeds a configured cap (qubit budget, enumeration limit)."""


class DegenerateInputError(ValueError):
    """Input is degenerate for the requested operation (zero vector, collapsed weights)."""


class UnsupportedGradientError(RuntimeError):
    """Requested gradient method does not apply to this circuit or device."""
