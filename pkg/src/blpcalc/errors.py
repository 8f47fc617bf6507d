"""Exception hierarchy shared by every module."""


class BlpError(Exception):
    """Base class; the CLI reports ``type(err).__name__`` on failure."""


class ParseError(BlpError, ValueError):
    pass


class NotCNF(ParseError):
    """Ordinal text whose terms are not in strictly descending order."""


class ZeroOrdinal(BlpError, ValueError):
    pass


class NotInImage(BlpError, ValueError):
    """A sequence that is not the pattern sequence of any ordinal."""


class InvalidPattern(BlpError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ZeroPattern(BlpError, ValueError):
    pass


class NotCopyable(BlpError, ValueError):
    pass


class NotSuitable(BlpError, ValueError):
    pass


class BadT(BlpError, ValueError):
    pass


class WrongType(BlpError, ValueError):
    pass


class UnknownName(BlpError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class OutOfRange(BlpError, ValueError):
    pass


class NoWitness(BlpError, RuntimeError):
    pass
