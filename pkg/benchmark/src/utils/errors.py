"""Exception types shared by the benchmark package."""


class InvalidParameterError(ValueError):
    """Raised when an operation receives a parameter outside its domain.

    Subclasses ValueError so callers that only care about bad input can keep
    catching ValueError.
    """


class ConfigError(InvalidParameterError):
    """Raised when an experiment or sweep configuration fails validation."""
