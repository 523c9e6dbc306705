"""Exception hierarchy shared by all modules."""


class QHHError(Exception):
    """Base class."""


class ParseError(QHHError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class ValidationError(QHHError):
    """Input violates a structural invariant; the message names it."""


class NotFiniteDimensional(ValidationError):
    pass


class NotRadicalSquareZero(ValidationError):
    pass


class NotDirected(ValidationError):
    pass


class VertexMismatch(ValidationError):
    pass


class NotAWalk(ValidationError):
    pass


class UnsupportedField(QHHError):
    pass


class InputNotInKernel(QHHError):
    pass


class VerificationError(QHHError):
    """A computed object failed a consistency check (construction bug or
    cross-check mismatch)."""
