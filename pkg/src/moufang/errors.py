class MoufangError(Exception):
    """Base class for errors raised by this package."""


class TableParseError(MoufangError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotALoop(MoufangError):
    pass


class InverseMismatch(MoufangError):
    pass


class NotAGroup(MoufangError):
    pass


class NotMoufang(MoufangError):
    pass


class NotASubloop(MoufangError):
    pass


class DegreeMismatch(MoufangError, ValueError):
    pass


class ClosureCapExceeded(MoufangError):
    pass


class RelationViolation(MoufangError):
    """A family of permutations failed a relation it is required to satisfy."""

    def __init__(self, message: str, reports=()):
        self.reports = list(reports)
        super().__init__(message)


class QuotientError(MoufangError):
    pass
