"""Exception types shared across the toolkit.

The CLI maps each family to an exit code, so callers mostly only need
to distinguish "bad input" from "valid input outside the domain".
"""


class VcGapError(Exception):
    pass


class InputError(VcGapError, ValueError):
    """Malformed text or parameters (DIMACS, cost files, generator params)."""


class GraphParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(InputError):
    pass


class DimensionError(InputError):
    """Structurally inconsistent LP problem or cost vector."""


class DomainError(VcGapError):
    """Valid input on which the requested quantity is not defined."""


class EdgelessGraphError(DomainError):
    def __init__(self, what="integrality gap"):
        super().__init__(
            f"{what} is undefined for a graph without edges "
            "(every result assumes E(G) is nonempty)"
        )


class SizeLimitError(DomainError):
    def __init__(self, n, limit, flag):
        self.n = n
        self.limit = limit
        super().__init__(
            f"graph has {n} vertices, above the exact-solver limit of {limit}; "
            f"raise it with {flag}"
        )


class RatioUndefinedError(DomainError):
    def __init__(self, ip_value):
        self.ip_value = ip_value
        super().__init__(
            f"LP value is 0 so the ratio is undefined (IP value = {ip_value})"
        )


class InvariantError(VcGapError, AssertionError):
    """A mathematical invariant failed; indicates a solver bug or bad input."""
