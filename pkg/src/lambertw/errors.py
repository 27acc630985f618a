"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the domain of the requested branch or function."""


class SingularityError(ArithmeticError):
    """Evaluation attempted too close to a singular point of a formula."""
