class SizeMismatchError(ValueError):
    """A partition and a cycle type (or element) live in different S_n."""


class DomainError(ValueError):
    """An operation was called outside the range where it is defined."""


class ParseError(ValueError):
    pass


class CacheVersionError(RuntimeError):
    pass


class AttributionError(RuntimeError):
    """Spectral multisets could not be matched within tolerance."""
