"""Exception hierarchy shared across the package.

Each class maps to one CLI exit code (see cli.EXIT_CODES).
"""


class LayersepError(Exception):
    """Base class for package errors."""


class DimensionError(LayersepError, ValueError):
    """Array shapes are incompatible with the requested operation."""


class DomainError(LayersepError, ValueError):
    """A value is outside its permitted domain (bad alpha, empty mask, ...)."""


class ConfigurationError(LayersepError, ValueError):
    """A config combination is invalid (e.g. oracle scorer without reference)."""


class DependencyError(LayersepError, RuntimeError):
    """A prerequisite artifact (checkpoint, corpus) is missing."""


class TrainingError(LayersepError, RuntimeError):
    """Training produced a non-finite loss."""

    def __init__(self, message: str, step: int):
        super().__init__(f"{message} (step {step})")
        self.step = step


class PersistenceError(LayersepError, OSError):
    """Reading or writing an on-disk artifact failed."""
