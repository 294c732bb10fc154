"""Exception hierarchy shared by every module.

All errors derive from :class:`EpifairError`, itself a ``ValueError`` so that
callers treating bad input generically keep working.
"""


class EpifairError(ValueError):
    """Base class for all package errors."""


class InvalidDistribution(EpifairError):
    """Values are empty, negative, non-finite or misaligned with groups."""


class AllZero(EpifairError):
    """The distribution sums to zero, so the index is undefined."""


class ZeroWithLogBranch(EpifairError):
    """A zero value hit an infinite term (Theil L or GE with alpha < 0)."""


class InvalidParameter(EpifairError):
    """An index parameter lies outside its admissible range."""


class EmptyGroup(EpifairError):
    """One of the two groups has no members."""


class NotTwoGroups(EpifairError):
    """Group labels do not contain exactly two distinct values."""


class TooFewAgents(EpifairError):
    """Fewer agents than requested quantile bins."""


class ZeroDenominator(EpifairError):
    """The bottom share of a percentile ratio holds zero total."""


class NegativeInput(EpifairError):
    pass


class NonFinite(EpifairError):
    pass


class LengthMismatch(EpifairError):
    pass


class InvalidProbability(EpifairError):
    pass


class NegativeEntry(EpifairError):
    pass


class DimensionMismatch(EpifairError):
    pass


class HorizonTooShort(EpifairError):
    pass


class InvalidTarget(EpifairError):
    pass


class HeterogeneousInput(EpifairError):
    """Trajectories to aggregate differ in scenario, stance or length."""


class ParseError(EpifairError):
    pass


class InvalidValue(EpifairError):
    """A configuration value is out of range; ``key`` names the culprit."""

    def __init__(self, key, message):
        super().__init__(f"{key}: {message}")
        self.key = key


class InvariantViolation(EpifairError):
    """A simulation step broke boundedness, stochasticity or conservation."""
