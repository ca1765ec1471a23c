"""Exception hierarchy shared by every kgraphkit module."""


class KGraphError(ValueError):
    """Base class for all structural and usage errors."""


class DanglingReference(KGraphError):
    pass


class DuplicateId(KGraphError):
    pass


class BadColor(KGraphError):
    pass


class InvalidSquare(KGraphError):
    pass


class MissingSquare(KGraphError):
    pass


class DuplicateSquare(KGraphError):
    pass


class AssociativityViolation(KGraphError):
    pass


class NotComposable(KGraphError):
    pass


class BadDegree(KGraphError):
    pass


class UnknownVertex(KGraphError):
    pass


class MalformedPresentation(KGraphError):
    pass


class OutOfRange(KGraphError):
    pass


class NotHereditary(KGraphError):
    pass


class PreconditionViolated(KGraphError):
    pass


class NotNested(KGraphError):
    pass


class TooLarge(KGraphError):
    pass


class BudgetExceeded(KGraphError):
    pass


class EmptyInput(KGraphError):
    pass


class ParseError(KGraphError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
