"""Exception types shared across the package."""


class QcleanError(Exception):
    """Base class for qclean-specific errors."""


class BudgetExceededError(QcleanError):
    """An enumeration would exceed the configured work budget."""


class ParseError(QcleanError):
    """Malformed code file; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvariantViolationError(QcleanError):
    """Input violates a structural code invariant (e.g. Hx Hz^T != 0)."""


class InfeasibleError(QcleanError):
    """A requested random construction could not be satisfied."""
