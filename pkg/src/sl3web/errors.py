"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input data violates a structural invariant (bad diagram, bad flags)."""


class MoveError(ValidationError):
    """A movie move or Reidemeister move does not match its source pattern."""


class InternalError(RuntimeError):
    """An internal consistency check failed (d^2 != 0, non-unimodular pairing,
    Kuperberg face missing, foam evaluation strategy incomplete)."""
