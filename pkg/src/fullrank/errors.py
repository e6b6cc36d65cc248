"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its work budget.

    Carries the required count so callers can decide to raise the budget
    and retry.
    """

    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs {required} steps, exceeding the budget of {budget}; "
            f"pass a larger budget to override"
        )


class PrimeNotFoundError(Exception):
    """No prime exists in the requested interval."""


class ConstructionInfeasibleError(Exception):
    """A construction cannot meet its entry bound for the given parameters."""
