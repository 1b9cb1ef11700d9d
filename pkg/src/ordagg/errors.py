"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class ChainMismatchError(DomainError):
    """Two values from different scales were combined.

    Rank equality across different scales is meaningless, so cross-scale
    operations are hard errors and never coerced.
    """


class SpecError(ValueError):
    """Problem in a textual spec file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SpecParseError(SpecError):
    """The spec file text is malformed (exit class 1)."""


class SpecValidationError(SpecError):
    """The spec file parsed but a table failed validation (exit class 2)."""
