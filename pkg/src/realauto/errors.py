"""Exception hierarchy for realauto."""


class RealAutoError(Exception):
    """Base exception for realauto errors."""

    pass


class DomainError(RealAutoError, ValueError):
    """Raised when an argument lies outside an operation's domain."""

    pass


class ParameterError(RealAutoError, ValueError):
    """Raised when a construction parameter or argument is out of range."""

    pass


class NoBracketError(RealAutoError):
    """Raised when a root-finding bracket does not change sign."""

    pass


class ConvergenceError(RealAutoError):
    """Raised when an iterative method fails to meet its tolerance."""

    pass


class ConfigError(RealAutoError):
    """Raised when configuration is malformed or a profile is unknown."""

    pass
