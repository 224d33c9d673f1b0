"""Exception types raised by the engine.

Budget problems and parameter-condition problems are kept in separate
hierarchies because the command line maps them to different exit codes.
"""


class EngineError(Exception):
    """Base class for all engine errors."""


class BudgetError(EngineError):
    """A computation would exceed a configured size limit."""


class CellBudgetExceeded(BudgetError):
    def __init__(self, cell, cap):
        super().__init__(f"cell {cell} exceeds the dimension cap {cap}; shrink the window")
        self.cell = cell
        self.cap = cap


class ParameterConditionError(EngineError):
    """The parameters given do not satisfy the condition an operation needs."""


class NotARationalSquare(ParameterConditionError):
    pass


class NoDegeneracy(ParameterConditionError):
    pass


class AmbiguousSolution(ParameterConditionError):
    pass


class NonIntegralEigenvalue(ParameterConditionError):
    pass


class InvalidSpec(ParameterConditionError):
    pass


class InvalidBase(EngineError):
    pass


class InvalidMode(EngineError):
    pass


class NotHomogeneous(EngineError):
    pass


class WindowRequired(EngineError):
    pass


class WindowMismatch(EngineError):
    pass


class SpecMismatch(EngineError):
    pass


class NonCanonicalWord(EngineError):
    pass
