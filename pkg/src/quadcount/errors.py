"""Exception types shared across the package.

Everything raised on purpose derives from QuadcountError so callers (and the
CLI) can catch one base class and map subclasses to exit codes.
"""


class QuadcountError(Exception):
    pass


class InvalidEdge(QuadcountError):
    """Self-loop, duplicate insert, or delete of a missing edge."""


class InvalidConfig(QuadcountError):
    """Bad construction parameters (epsilon out of range, unknown pattern, ...)."""


class InconsistentState(QuadcountError):
    """An internal invariant broke: negative counter, delta for a missing edge."""


class TableDisabled(QuadcountError):
    """Read or write against an auxiliary table this store does not maintain."""


class PatternDisabled(QuadcountError):
    """Query for a pattern the engine was not configured to track."""


class NegativeResult(QuadcountError):
    """An inclusion-exclusion conversion produced a negative count."""


class SizeLimit(QuadcountError):
    """Brute-force oracle asked to process a graph above its configured cap."""


class UnsupportedProblem(QuadcountError):
    """Reduction request outside what the chosen backend can decide."""


class ParseError(QuadcountError):
    """Malformed update-stream line; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class OracleMismatch(QuadcountError):
    """Cross-check failure: engine and oracle disagree on a query."""

    def __init__(self, step: int, query: str, engine_value: int, oracle_value: int):
        super().__init__(
            f"step {step}: {query}: engine={engine_value} oracle={oracle_value}"
        )
        self.step = step
        self.query = query
        self.engine_value = engine_value
        self.oracle_value = oracle_value
