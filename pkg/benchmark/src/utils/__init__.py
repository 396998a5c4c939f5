"""Shared utilities."""

from .errors import ConfigError, InvalidParameterError

__all__ = ["ConfigError", "InvalidParameterError"]
