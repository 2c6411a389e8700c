"""Exception types shared across the package."""


class HornMineError(Exception):
    """Base class for errors raised by this package."""


class CapacityError(HornMineError):
    """A size guard was exceeded (too many atoms for exhaustive work)."""


class UnsupportedOrderError(HornMineError):
    """A clause would need synaptic connections beyond third order."""


class ParseError(HornMineError):
    """Malformed program or rules text, with a source position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class FormatError(HornMineError):
    """Malformed events or synapse file."""
