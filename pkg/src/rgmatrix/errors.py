"""Exception types shared across the package."""


class RGMatrixError(Exception):
    """Base class for all errors raised by rgmatrix."""


class ParseError(RGMatrixError, ValueError):
    """A malformed edge-list or label-map line.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class ValidationError(RGMatrixError, ValueError):
    """Input or result violates a documented precondition or invariant."""


class ConvergenceError(RGMatrixError, RuntimeError):
    """An iterative solve did not reach its tolerance.

    ``residual`` holds the last measured residual and ``iterations`` the
    number of iterations performed when the error was raised.
    """

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations
