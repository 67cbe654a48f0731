"""Exception hierarchy. The CLI maps each class onto an exit code."""


class JRainbowError(Exception):
    """Base class for all package errors."""


class ValidationError(JRainbowError, ValueError):
    """Input violates a structural invariant (range, simplicity, surjectivity)."""


class ParseError(ValidationError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConnectivityError(ValidationError):
    """Solver entry was given a disconnected graph."""


class BudgetExceeded(JRainbowError):
    """Brute-force enumeration would exceed the configured assignment budget."""

    def __init__(self, k: int, n: int, budget: int):
        self.k, self.n, self.budget = k, n, budget
        super().__init__(f"brute force needs {k}^{n} = {k ** n} assignments, budget is {budget}")
