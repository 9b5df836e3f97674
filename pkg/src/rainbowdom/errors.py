class InvalidInput(ValueError):
    """Raised when an argument violates a documented precondition."""


class BudgetExceeded(RuntimeError):
    """The search ran out of nodes or wall-clock time before proving optimality.

    ``incumbent`` holds the best solution found so far (or ``None``); it is
    feasible but not known to be optimal.
    """

    def __init__(self, message, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent
