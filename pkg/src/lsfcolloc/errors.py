"""Exception types raised by the solver."""


class LSFError(Exception):
    """Base class for all solver errors."""


class DomainError(LSFError, ValueError):
    """An argument lies outside its mathematical domain."""


class ShapeError(LSFError, ValueError):
    """Array or vector dimensions do not match."""


class CapacityError(LSFError):
    """The requested problem size exceeds a configured limit."""


class ParseError(LSFError, ValueError):
    """Malformed potential or configuration text."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OptimizationError(LSFError):
    """The trace minimizer failed; ``best`` holds the best point seen."""

    def __init__(self, message, best=None, value=None):
        super().__init__(message)
        self.best = best
        self.value = value


class ConvergenceError(LSFError):
    """The eigensolver did not converge; partial Ritz data are attached."""

    def __init__(self, message, ritz_values=None, residuals=None, iterations=0):
        super().__init__(message)
        self.ritz_values = ritz_values
        self.residuals = residuals
        self.iterations = iterations
