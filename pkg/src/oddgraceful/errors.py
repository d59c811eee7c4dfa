"""Exception types shared across the package."""


class OddGracefulError(Exception):
    """Base class for every error this package raises on purpose."""


class InvalidParameterError(OddGracefulError, ValueError):
    """A structural parameter (cycle order, path order, ...) is out of range."""


class ValidationError(OddGracefulError, ValueError):
    """Input data breaks a graph invariant (self-loop, duplicate edge, bad id)."""


class IncompleteLabelingError(OddGracefulError, ValueError):
    """A labeling does not cover every vertex of its graph."""


class BoundViolationError(OddGracefulError, ValueError):
    """Requested path order is below the constructible minimum for the cycle."""

    def __init__(self, message: str, required_min: int):
        super().__init__(message)
        self.required_min = required_min


class ParseError(OddGracefulError, ValueError):
    """A text document could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
