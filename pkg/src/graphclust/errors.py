"""Exception hierarchy. Each class maps onto one CLI exit code."""


class GraphClustError(Exception):
    exit_code = 1


class ValidationError(GraphClustError, ValueError):
    """Bad input graph or out-of-domain parameter."""


class EdgeListParseError(ValidationError):
    def __init__(self, lineno: int, line: str, reason: str = "expected exactly two labels"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class UndefinedCoefficientError(GraphClustError, ArithmeticError):
    """C(b) has a zero spanning-tree denominator (0/0 is not 'no clustering')."""

    exit_code = 2


class ResourceLimitError(GraphClustError):
    exit_code = 3


class CountOverflowError(GraphClustError, OverflowError):
    """A subgraph count left the supported 128-bit range."""

    exit_code = 3


class SamplingError(GraphClustError):
    """Rejection sampling gave up before producing a connected graph."""

    exit_code = 1
