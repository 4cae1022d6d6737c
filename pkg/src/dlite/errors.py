"""Exception types shared across the package."""


class DliteError(Exception):
    """Base class for every error raised by this package."""


class DomainError(DliteError, ValueError):
    """A probability argument is outside [0, 1] or not finite."""


class LengthMismatch(DliteError, ValueError):
    """Labels and weights have different lengths."""


class DuplicateLabel(DliteError, ValueError):
    """An outcome label (or distribution name) occurs more than once."""


class NegativeWeight(DliteError, ValueError):
    """A weight or mass is negative."""


class AllZero(DliteError, ValueError):
    """Every weight is zero; the distribution cannot be normalized."""


class NonFiniteInput(DliteError, ValueError):
    """A weight is NaN or infinite."""


class NonPositiveEpsilon(DliteError, ValueError):
    """A smoothing epsilon must be strictly positive."""


class KlUndefined(DliteError, ValueError):
    """KL divergence is undefined: some outcome has p > 0 but q = 0.

    This is the unboundedness failure mode of relative entropy; callers
    may epsilon-smooth both distributions first to avoid it.
    """


class QuadratureNonConvergence(DliteError, RuntimeError):
    """Adaptive quadrature exhausted its panel budget before reaching tolerance."""


class ConsistencyError(DliteError, RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


class ParseError(DliteError, ValueError):
    """A distribution file could not be parsed."""
