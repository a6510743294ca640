class TMCVError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TMCVError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphError(TMCVError, ValueError):
    pass


class BudgetError(TMCVError, ValueError):
    pass


class InfeasibleError(TMCVError):
    """The requested exact computation is refused (too large or wrong graph class)."""
