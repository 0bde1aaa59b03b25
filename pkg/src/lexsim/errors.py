"""Exception hierarchy shared by every model module.

All failures raised by this package derive from LexsimError so callers can
catch one type. Domain violations double as ValueError and solver failures as
RuntimeError, keeping plain-Python expectations intact.
"""

from __future__ import annotations


class LexsimError(Exception):
    """Base class for every error this package raises."""


class DomainError(LexsimError, ValueError):
    """A model input lies outside its admissible domain."""


class ConvergenceError(LexsimError, RuntimeError):
    """A solver failed to reach the requested accuracy."""


class ConfigError(LexsimError, ValueError):
    """A run configuration failed validation.

    `errors` holds (field_path, message) pairs for every violation found, not
    just the first one.
    """

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = list(errors)
        lines = "; ".join(f"{path}: {msg}" for path, msg in self.errors)
        super().__init__(lines)
