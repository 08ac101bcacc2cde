"""Exception hierarchy.

``MatroidError`` subclasses are domain failures (CLI exit code 1);
``ParseError`` subclasses are input/usage failures (exit code 2).
"""


class MatroidError(Exception):
    pass


class InvalidCopoints(MatroidError):
    pass


class NotSimple(MatroidError):
    pass


class RankOutOfRange(MatroidError):
    pass


class EnumerationCapExceeded(MatroidError):
    pass


class InvalidClutter(MatroidError):
    pass


class ExactCapExceeded(MatroidError):
    pass


class NoColineContained(MatroidError):
    pass


class RankMismatch(MatroidError):
    pass


class PropertyBetaRequired(MatroidError):
    pass


class SubsetCapExceeded(MatroidError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ElementOutOfRange(ParseError):
    pass


class CompactTokenWithLargeN(ParseError):
    pass
