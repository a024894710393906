"""Exception hierarchy for the rank-metric toolkit."""


class RankMetricError(ValueError):
    """Base class for every error raised by this package."""


class NonPrime(RankMetricError):
    pass


class BudgetExceeded(RankMetricError):
    pass


class FieldDivisionByZero(RankMetricError, ZeroDivisionError):
    pass


class TowerMismatch(RankMetricError):
    pass


class NotABasis(RankMetricError):
    pass


class EvenCharacteristic(RankMetricError):
    pass


class SearchExhausted(RankMetricError):
    """A search that is guaranteed to succeed by theory came back empty."""


class DependentGenerators(RankMetricError):
    pass


class BadDimension(RankMetricError):
    pass


class EnumerationTooLarge(RankMetricError):
    pass


class ShapeMismatch(RankMetricError):
    pass


class AmbientMismatch(RankMetricError):
    pass


class ZeroCode(RankMetricError):
    pass


class NotOptimalAnticode(RankMetricError):
    pass


class ConfigError(RankMetricError):
    pass
