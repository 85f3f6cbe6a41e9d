# contnorm/errors.py


class ContNormError(Exception):
    """
    Base class for every error raised by contnorm.
    """


class StepTooCoarseError(ContNormError, ValueError):
    """The solver step leaves fewer than the minimum number of cells across the interior."""


class IntegratorBlowUpError(ContNormError, ArithmeticError):
    """Propagation produced a non-finite value."""


class OffGridError(ContNormError, ValueError):
    """A position was requested that is not a node of the sample grid."""


class InvalidWavenumberError(ContNormError, ValueError):
    """A wavenumber outside its admissible range (k <= 0, or a k'-window reaching k <= 0)."""


class MatchingPointError(ContNormError, ValueError):
    """The matching point lies inside the potential's support."""


class DegenerateWavenumberError(ContNormError, ValueError):
    """
    The two wavenumbers are too close for the Wronskian boundary formula.

    Use the equal-k overlap instead.
    """


class IncompatibleGridError(ContNormError, ValueError):
    """Two sample sets do not share the same grid."""


class ZeroAmplitudeError(ContNormError, ArithmeticError):
    """The asymptotic amplitude vanished, so the state cannot be normalized."""


class WindowTooSmallError(ContNormError, ValueError):
    """A verification window cannot resolve the smeared delta function."""


class BoundStateError(ContNormError, ValueError):
    """The potential supports bound states, so the continuum alone is not complete."""


class ConfigError(ContNormError, ValueError):
    """A run-config document is malformed or fails validation."""
