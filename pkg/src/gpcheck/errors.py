"""Exception hierarchy shared by all gpcheck modules."""


class GaussError(Exception):
    """Base class for every error raised by gpcheck."""


class ParseError(GaussError):
    """Malformed input text. Carries 1-based ``line`` and ``column``."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class TokenError(ParseError):
    """A token that is not a letter ``[A-Za-z0-9_]+``."""


class LetterCountError(GaussError):
    """A letter does not occur exactly twice in the paragraph."""


class DisconnectedParagraph(GaussError):
    pass


class EmptyWord(GaussError):
    pass


class NotDoubleLetter(GaussError):
    pass


class NotSingleLetter(GaussError):
    pass


class UnknownLetter(GaussError):
    pass


class SpanNotInWord(GaussError):
    pass


class NotWordWise(GaussError):
    """A partition fails one of the word-wise clauses."""

    def __init__(self, clause, detail=""):
        self.clause = clause
        super().__init__(f"not a word-wise partition (clause {clause}) {detail}".strip())


class VirtualStringError(GaussError):
    pass


class EndpointsNotOnCommonCircle(VirtualStringError):
    pass


class ArrowNotOnCircle(VirtualStringError):
    pass


class TailsNotOnCircle(VirtualStringError):
    pass


class QUndefined(VirtualStringError):
    """Some core circle carries an odd number of arrow endpoints."""


class PreconditionViolated(GaussError):
    """A construction needs conditions the input pair does not satisfy."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        super().__init__(f"condition ({condition}) fails {detail}".strip())
