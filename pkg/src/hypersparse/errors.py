"""Exception types raised across the package."""


class InputError(ValueError):
    """An argument violates a documented precondition."""


class UnboundedError(InputError):
    """A supremum is infinite, e.g. resistance between unreachable vertices."""


class RefusalError(InputError):
    """An exhaustive check refuses an instance beyond its enumeration guard."""


class ParseError(InputError):
    """Malformed text input; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
