"""Exception types shared across the package."""


class SingularDenominator(ArithmeticError):
    """Iteration denominator is exactly zero; the orbit cannot continue."""


class NonFiniteInput(ValueError):
    """An input value is NaN or infinite."""


class NonFiniteResult(ArithmeticError):
    """A computation overflowed past what rescaling can absorb."""


class NoConvergence(RuntimeError):
    """The simultaneous root iteration hit its sweep cap with bad residuals."""


class SceneFormatError(ValueError):
    """Scene document is malformed (bad JSON shape, unknown or missing keys)."""


class SceneConstraintError(ValueError):
    """Scene document parsed but violates a numeric constraint."""
