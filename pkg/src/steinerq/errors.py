"""Exception hierarchy shared by all modules.

The CLI maps these onto distinct exit codes (parse 2, precondition 3,
resource cap 4), so raising the right class is part of the contract.
"""


class SteinerQError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(SteinerQError):
    """A domain precondition was violated (bad parameters, invalid input)."""


class ParseError(SteinerQError):
    """A design file is malformed.  Carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceCapError(SteinerQError):
    """A configured enumeration cap was exceeded before completion."""
