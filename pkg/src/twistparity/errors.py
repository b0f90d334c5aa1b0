"""Exception hierarchy.  Every error raised on purpose derives from TwistParityError."""


class TwistParityError(Exception):
    pass


class InvalidInput(TwistParityError, ValueError):
    pass


class UndefinedValuation(InvalidInput):
    """Valuation of zero was requested."""


class FactorizationError(TwistParityError, ArithmeticError):
    """The factorization effort cap was reached before a complete factorization."""


class PrecisionExhausted(TwistParityError, ArithmeticError):
    """A local solubility search hit its depth bound without a verdict."""


class TableError(TwistParityError, ValueError):
    pass


class TableParseError(TableError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


class IncompleteFixture(TableError):
    pass
