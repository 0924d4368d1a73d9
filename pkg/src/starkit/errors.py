"""Exception types shared across the package."""


class StarkitError(ValueError):
    """Base class for all input and precondition errors."""


class ArityError(StarkitError):
    """Operands disagree on variable count, or an index is out of range."""


class ParseError(StarkitError):
    """Expression text could not be parsed. Carries a 1-based column."""

    def __init__(self, message, column=None):
        self.column = column
        if column is not None:
            message = f"syntax error at column {column}: {message}"
        super().__init__(message)


class InputError(StarkitError):
    """Malformed input file or structured value (forms, surfaces, maps)."""
