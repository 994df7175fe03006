"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its allowed work budget.

    Raised *before* starting the oversized work, with the estimated cost
    attached, so callers can either raise the budget or downgrade to a
    sampled / partial answer.
    """

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(f"{message} (needs ~{required}, budget {budget})")
        self.required = required
        self.budget = budget


class ConsistencyError(RuntimeError):
    """An internal structural invariant failed; never silently accepted."""
