"""Exception types for scmh."""

from pathlib import Path


class ScmhError(Exception):
    """Base class for all scmh errors."""


class ShapeError(ScmhError, ValueError):
    """A triangle or array does not have the required shape."""


class DomainError(ScmhError, ValueError):
    """An argument violates the precondition of an operation."""


class InfeasibleError(ScmhError):
    """No composition with the requested total exists."""


class ConstructionError(ScmhError):
    """A construction produced an object that fails its own validation."""


class ConfigError(ScmhError, ValueError):
    """A setting could not be parsed."""


class BoundsError(ScmhError, ValueError):
    """An enumeration was requested beyond the configured bounds."""


class FormatError(ScmhError, ValueError):
    """A text file could not be parsed."""

    def __init__(self, message: str, path: str | Path | None = None, line: int = 0):
        self.path = str(path) if path is not None else None
        self.line = line
        if self.path is not None and line:
            message = f"{self.path}:{line}: {message}"
        elif self.path is not None:
            message = f"{self.path}: {message}"
        super().__init__(message)
