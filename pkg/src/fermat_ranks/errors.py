"""Exception types shared across the package."""


class FermatRanksError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FermatRanksError, ValueError):
    """An input violates a documented precondition."""


class LevelZeroError(ValidationError):
    """The operation needs n >= 1 (the kernel B of the level map is undefined at n = 0)."""


class NonAbelianError(ValidationError):
    """The acting group is not abelian, so the irreducible-representation construction does not apply."""


class HypothesisError(ValidationError):
    """A hypothesis-dependent bound was requested without asserting its hypothesis."""


class InconsistentOverrideError(ValidationError):
    """Field-degree overrides break the divisibility or monotonicity constraints."""


class BudgetExceededError(FermatRanksError):
    """Brute-force enumeration would exceed the configured budget; use closed forms."""

    def __init__(self, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(
            f"enumeration of {size} characters exceeds the budget of {budget}"
        )
