class BudgetExceeded(RuntimeError):
    """Raised when an exact search exceeds its clique-count, node or time budget."""


class DimensionMismatch(ValueError):
    """Points of differing dimension, or a dimension an algorithm does not support."""


class MarginCollapse(ArithmeticError):
    """The embedding's separation from the sqrt(2) threshold fell below tolerance."""


class ParseError(ValueError):
    """Malformed input file or expression."""
