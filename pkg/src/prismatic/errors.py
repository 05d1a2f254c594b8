"""Exception types shared across the package."""


class PrismaticError(Exception):
    pass


class GraphFormatError(PrismaticError, ValueError):
    """Malformed graph input (graph6 line, edge list, generator spec)."""


class BudgetExhausted(PrismaticError):
    """A search ran out of its time or size budget before reaching a definitive answer.

    Distinct from a definitive negative result: callers must not read this as
    "no witness exists".
    """


class TheoremViolation(PrismaticError):
    """An exhaustive search came back empty where a theorem guarantees a witness.

    Either the implementation has a bug or the guarantee is wrong; both are
    worth a loud failure.
    """

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = context or {}


class InvalidCertificate(PrismaticError, ValueError):
    pass
