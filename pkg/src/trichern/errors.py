"""Exception types shared across the package."""


class TrichernError(Exception):
    """Base class for all library errors."""


class InvalidSimplex(TrichernError):
    """A simplex was given a repeated, negative or empty vertex list."""


class MapDomainError(TrichernError):
    """A vertex map refers to vertices outside its source or target."""


class UnknownSimplex(TrichernError):
    """A simplex was requested that is not part of the complex."""


class NotSurjective(TrichernError):
    """A word does not use every letter of its alphabet."""


class EmptyWord(TrichernError):
    """Letter deletion would leave no letters."""


class FiberTooSmall(TrichernError):
    """Fiber cycles need at least three vertices to stay simplicial."""


class WrongDimension(TrichernError):
    """Operation applied to a simplex of an unsupported dimension."""


class NonOrientable(TrichernError):
    """The surface admits no coherent orientation of its triangles."""


class NotClosedSurface(TrichernError):
    """The complex is not a closed connected surface."""


class NonOrientableBundleStructure(TrichernError):
    """Fiber orientation cannot be propagated consistently over the base."""


class IntegralityViolation(TrichernError):
    """A signed sum that must be an integer is not one."""


class RealizationAmbiguity(TrichernError):
    """Cell gluing rules conflicted while realizing a necklace."""


class InvalidBundle(TrichernError):
    """Bundle validation failed.  Carries the itemized report."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class BundleFileError(TrichernError):
    """A bundle file failed schema-level parsing."""
