"""Exception types shared across the package."""


class SelfRefError(Exception):
    """Base class for every error raised by selfref."""


class ParseError(SelfRefError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LanguageError(SelfRefError):
    """A symbol outside the selected language appeared."""


class NumeralTooLarge(SelfRefError):
    pass


class UnknownSymbol(SelfRefError):
    pass


class NotACode(SelfRefError):
    pass


class NonPresburger(SelfRefError):
    """Input contains multiplication or an oracle atom."""


class NotASentence(SelfRefError):
    pass


class AtomLimit(SelfRefError):
    pass


class ArityError(SelfRefError):
    """A formula has the wrong set of free variables."""


class EvaluatorMissing(SelfRefError):
    pass
