"""Exception hierarchy.

Every error raised by the library derives from :class:`CyclextError` so the
CLI can map library failures to exit code 1 and anything else to exit 2.
"""


class CyclextError(Exception):
    """Base class for all library errors."""


class PreconditionViolated(CyclextError, ValueError):
    pass


class NotAUnit(CyclextError, ValueError):
    pass


class NotCoprime(CyclextError, ValueError):
    pass


class ShapeMismatch(CyclextError, ValueError):
    pass


class NonIntegerGenus(CyclextError, ValueError):
    pass


class NegativeGenus(CyclextError, ValueError):
    pass


class IndexNotDividing(CyclextError, ValueError):
    pass


class NegativeBetti(CyclextError, ValueError):
    pass


class InvalidSpec(CyclextError, ValueError):
    """A (signature, epimorphism) pair fails validation."""


class InvalidMove(CyclextError, ValueError):
    pass


class RestrictedMove(InvalidMove):
    """Handle slide requested while some alpha image is nonzero."""


class InternalInvariantViolation(CyclextError, RuntimeError):
    """A computed object broke an invariant that holds by construction; a bug."""


class NormalizationImpossible(InternalInvariantViolation):
    """The normalizer failed on a valid input."""


class NotExtendable(CyclextError, ValueError):
    pass


class InvalidClass(CyclextError, ValueError):
    pass


class UncappedInfiniteFamily(CyclextError, ValueError):
    pass


class CriterionNotSubgroup(InternalInvariantViolation):
    pass


class BudgetExceeded(CyclextError, RuntimeError):
    pass
