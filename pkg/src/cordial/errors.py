"""Exception hierarchy shared by every module of the package."""


class CordialError(Exception):
    """Base class for all errors raised by :mod:`cordial`."""


class InvalidSpecError(CordialError, ValueError):
    pass


class InvalidArgumentError(CordialError, ValueError):
    pass


class InvalidLabelingError(CordialError, ValueError):
    pass


class UnsupportedInputError(CordialError, ValueError):
    pass


class PreconditionError(CordialError, ValueError):
    pass


class InvalidSwitchError(PreconditionError):
    pass


class NotApplicableError(CordialError, ValueError):
    pass


class ResourceLimitError(CordialError, RuntimeError):
    """The requested search exceeds a configured cap."""


class ParseError(CordialError, ValueError):
    """Malformed input file; ``lineno`` is 1-based, or None for whole-file problems."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
