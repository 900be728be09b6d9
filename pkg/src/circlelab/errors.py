"""Exception types shared across the package."""


class CircleLabError(Exception):
    """Base class for all package-specific failures."""


class PrecisionError(CircleLabError):
    """A computed quantity fell below the floating-point trust threshold."""


class RationalRotationError(CircleLabError):
    """An orbit closed up (or tied) within tolerance: the rotation number
    looks rational.  Carries the detected p/q when one is available."""

    def __init__(self, message: str, p: int | None = None, q: int | None = None):
        super().__init__(message)
        self.p = p
        self.q = q


class ReturnsExhaustedError(CircleLabError):
    """Closest-return search ran out of iterations before the requested
    depth.  ``partial`` holds the coefficients recovered so far."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class TuningError(CircleLabError):
    """Parameter search failed; carries the deepest matched level."""

    def __init__(self, message: str, matched_depth: int = 0):
        super().__init__(message)
        self.matched_depth = matched_depth


class StructureError(CircleLabError):
    """Combinatorial structure violated (partition, refinement, or chain)."""


class QuadratureError(CircleLabError):
    """Numerical integration did not reach its accuracy budget."""


class ConfigError(CircleLabError):
    """Invalid experiment configuration; names the offending field."""
