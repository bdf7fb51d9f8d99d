"""Exception hierarchy shared by every module of the package."""


class PermextError(Exception):
    """Base class for all errors raised by permext."""


class FieldMismatchError(PermextError, ValueError):
    """Operands live over different fields."""


class DimensionError(PermextError, ValueError):
    pass


class ParseError(PermextError, ValueError):
    """A scalar, field or document string could not be parsed."""


class SizeLimitError(PermextError, ValueError):
    """An enumeration or closure would exceed its configured cap."""


class BudgetExceededError(SizeLimitError):
    """The group to be enumerated is larger than the search budget."""

    def __init__(self, order, budget):
        self.order = order
        self.budget = budget
        super().__init__(f"group order {order} exceeds search budget {budget}")


class UnsupportedFieldError(PermextError, ValueError):
    pass


class NotSpanningError(PermextError, ValueError):
    pass


class NoExtensionError(PermextError, ValueError):
    """A permutation that was required to extend does not."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotSimplexError(PermextError, ValueError):
    pass


class NotCollinearError(PermextError, ValueError):
    pass
