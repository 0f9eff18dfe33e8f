"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible lengths or shapes."""


class BudgetExceededError(RuntimeError):
    """A codeword enumeration would exceed the configured budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration needs {required} codewords, budget is {budget}"
        )
        self.required = required
        self.budget = budget


class HypothesisViolatedError(ValueError):
    """A formula was applied to inputs that violate its hypotheses."""


class NotEmbeddedError(HypothesisViolatedError):
    """A closed form for embedded families was applied to a non-embedded one."""


class NotInUnionError(ValueError):
    """A vector was tagged against a family containing it in no member code."""


class ParseError(ValueError):
    """A family or generator file is malformed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
