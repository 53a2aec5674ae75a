"""Exception hierarchy.

Every error raised by the library derives from :class:`GfkitError`, which is a
``ValueError`` so callers that only care about "bad input" can catch that.
"""


class GfkitError(ValueError):
    pass


class CompositionConditionViolated(GfkitError):
    """(I - A)^-1 has a negative entry, so the family contains negative parts."""


class DegenerateFactor(GfkitError):
    """A denominator exponent came out nonpositive."""


class NotInFamily(GfkitError):
    pass


class NonPositiveRatio(GfkitError):
    pass


class PreconditionViolated(GfkitError):
    pass


class ParameterViolation(GfkitError):
    pass


class InfeasibleSequence(GfkitError):
    pass


class TooMany(GfkitError):
    pass


class FirstPartNotGuaranteed(GfkitError):
    """The first constraint of a rational system allows a negative first part."""


class NegativeExponent(GfkitError):
    pass


class NotACompositionFamily(GfkitError):
    """Raised by the enumerator when a valid suffix admits a negative part."""
