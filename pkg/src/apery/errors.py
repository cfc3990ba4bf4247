"""Exception types shared across the toolkit."""


class InvalidParamsError(ValueError):
    """Input violates a documented precondition (bounds, gcd, ordering)."""


class OracleInfeasibleError(RuntimeError):
    """A computation is too large for the brute-force engine (cap exceeded).

    This signals infeasibility of the requested table size, not a math error.
    """


class ConsistencyError(RuntimeError):
    """An internal exactness check failed, e.g. a corrupted Apery set."""
