"""Exception hierarchy shared by all ringlab modules."""


class RinglabError(Exception):
    """Base class for all errors raised by this package."""


class MixedFields(RinglabError):
    """Operands belong to different coefficient fields."""


class InversionOfZero(RinglabError):
    """Multiplicative inverse of zero requested."""


class AmbientMismatch(RinglabError):
    """Subspaces live in coordinate spaces of different dimensions."""


class BadShape(RinglabError):
    """Input data has the wrong dimensions or length."""


class NotAssociative(RinglabError):
    """Structure constants violate associativity; carries the violating triple."""

    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"associativity fails on basis triple {triple}")


class UnitLawFails(RinglabError):
    """Declared unit vector is not a two-sided identity; carries the index."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"unit law fails on basis element {index}")


class NotClosed(RinglabError):
    """Matrix span is not closed under multiplication; carries a witness pair."""

    def __init__(self, pair, message=None):
        self.pair = pair
        super().__init__(message or f"product of generators {pair} falls outside the span")


class NoUnit(RinglabError):
    """Matrix span does not contain the identity matrix."""


class DimensionMismatch(RinglabError):
    """Element coordinate length differs from the algebra dimension."""


class NotAnIdeal(RinglabError):
    """Subspace is not a two-sided ideal where one is required."""


class ImproperIdeal(RinglabError):
    """Ideal equals the whole algebra where a proper one is required."""


class InfiniteField(RinglabError):
    """Exhaustive enumeration requested over the rationals."""


class NonIntegralConstants(RinglabError):
    """Structure constants are not integers where integrality is required."""


class WitnessNotCentral(RinglabError):
    """Witness map image is not contained in the center."""


class NotNested(RinglabError):
    """Inner subspace is not contained in the outer one."""


class NotMaximal(RinglabError):
    """Supplied ideal is not a maximal one-sided ideal."""


class TooLarge(RinglabError):
    """Requested exhaustive sweep exceeds the configured size guard."""


class RadicalUncertified(RinglabError):
    """Internal radical certificate failed validation (implementation bug)."""
