"""Domain errors raised by qotoric.

Every error derives from :class:`QotoricError`, which the CLI maps to exit
status 2.  Malformed input (bad JSON, missing keys) is reported separately.
"""


class QotoricError(ValueError):
    """Base class for all domain errors."""


class NotASublattice(QotoricError):
    pass


class RankMismatch(QotoricError):
    pass


class DimensionTooLarge(QotoricError):
    pass


class EmptySupport(QotoricError):
    pass


class UnboundedDirection(QotoricError):
    pass


class ZeroSeries(QotoricError):
    pass


class TruncationTooCoarse(QotoricError):
    """The stored terms of a truncated series do not determine the answer."""


class BoundaryWeight(QotoricError):
    """A weight vector is not in the interior of the relevant cone."""


class NonIntegralWeight(QotoricError):
    pass


class NonIntegralValue(QotoricError):
    pass


class WeightNotInDualLattice(QotoricError):
    pass


class NoVertex(QotoricError):
    """The semigroup cone contains a line, so there is no zero-dimensional orbit."""


class SearchBudgetExceeded(QotoricError):
    def __init__(self, explored: int):
        super().__init__(f"isomorphism search gave up after {explored} nodes")
        self.explored = explored


class NotQuasiOrdinary(QotoricError):
    pass


class DegenerateExponent(QotoricError):
    pass


class NotGaloisStable(QotoricError):
    pass


class ZeroDiscriminant(QotoricError):
    pass
