"""Exception types shared across the package."""


class MockinjError(Exception):
    """Base class for computational errors raised by this package."""


class CartanSpecError(MockinjError, ValueError):
    """Malformed Cartan type string, or rank out of range for the type."""


class NegativeCoordinateError(MockinjError, ValueError):
    """A weight had a negative coordinate where nonnegative ones are required."""


class BasisMismatchError(MockinjError, ValueError):
    """Characters living in different weight coordinate systems were combined."""


class NonSymmetricCharacterError(MockinjError, ValueError):
    """Decomposition into simples requires a reflection-symmetric character."""


class NotModuleCharacterError(MockinjError, ValueError):
    """A genuine module character (nonnegative simple multiplicities) was required."""


class BoxLimitExceededError(MockinjError, ValueError):
    """Brute-force enumeration was asked to search beyond its configured box."""


class CacheFormatError(MockinjError, ValueError):
    """A persisted memo file could not be used; callers should warn and go on."""
