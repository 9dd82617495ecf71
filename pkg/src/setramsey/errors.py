"""Exception types shared across the package."""


class BudgetExceeded(RuntimeError):
    """A search ran out of its node budget. The answer is unknown, not negative."""

    def __init__(self, limit: int, what: str = "search"):
        super().__init__(f"{what} exceeded node budget of {limit}")
        self.limit = limit


class ResourceLimitError(ValueError):
    """An input is larger than a configured enumeration or palette limit."""


class FormatError(ValueError):
    """A coloring, code or partition file is malformed or violates an invariant."""


class StrategyError(ValueError):
    """A requested construction does not apply to the given parameters."""
