from __future__ import annotations


class SolvlieError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SolvlieError, ValueError):
    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.pos = pos
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"position {pos}")
        super().__init__(f"{message} at {', '.join(where)}" if where else message)
        self.message = message


class JacobiError(SolvlieError, ValueError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"Jacobi identity fails: {violation}")


class DegenerateMetricError(SolvlieError, ValueError):
    pass


class NotSolvableError(SolvlieError, ValueError):
    pass


class NotNilpotentError(SolvlieError, ValueError):
    pass


class NotDerivationError(SolvlieError, ValueError):
    pass


class UnsupportedError(SolvlieError):
    """The input lies outside the scope the algorithms can decide."""
