"""Exception hierarchy shared by every trinodiff module."""


class TrinodiffError(Exception):
    """Base class for all library errors."""


class ConfigError(TrinodiffError, ValueError):
    """Unsupported field degree, unknown suite, bad CLI configuration."""


class DomainError(TrinodiffError, ValueError):
    """An operation was applied outside the domain where it is defined."""


class CatalogError(TrinodiffError, KeyError):
    """Unknown catalog id, or an exponent that does not evaluate at this m."""

    def __str__(self):
        # KeyError quotes its argument; keep messages readable.
        return str(self.args[0]) if self.args else ""


class HypothesisError(TrinodiffError):
    """The Walsh-to-weight formula was applied where 2n + W(w) vanishes."""

    def __init__(self, message, w=None):
        super().__init__(message)
        self.w = w


class InconsistentDataError(TrinodiffError):
    """Power-moment solution is not a nonnegative integer."""
