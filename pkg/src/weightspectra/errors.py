"""Exception types shared across the package."""


class NotAPrimePower(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class OutOfRange(PreconditionViolated):
    pass


class RankDeficient(PreconditionViolated):
    pass


class DomainError(ValueError):
    pass


class NoRoot(ArithmeticError):
    pass


class Infeasible(ValueError):
    pass


class ResourceLimit(RuntimeError):
    """Raised instead of starting an enumeration larger than the configured budget."""
