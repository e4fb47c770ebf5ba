"""Exception types shared across the library."""


class CasimirLabError(Exception):
    """Base class for all library errors."""


class InvalidDynkinType(CasimirLabError, ValueError):
    """Family/rank combination is not a valid Dynkin type."""


class DimensionMismatch(CasimirLabError, ValueError):
    """Vectors or matrices with incompatible shapes."""


class NotInLattice(CasimirLabError, ValueError):
    """Coordinates do not lie in the selected lattice."""


class NonDominantWeight(CasimirLabError, ValueError):
    """A dominant weight was required."""


class CapExceeded(CasimirLabError, RuntimeError):
    """A configured size cap would be exceeded; the computation is refused.

    Carries enough structure for a machine-readable refusal: what was
    measured, the measured value and the configured limit.
    """

    def __init__(self, what: str, actual, limit):
        self.what = what
        self.actual = actual
        self.limit = limit
        super().__init__(f"{what} = {actual} exceeds cap {limit}")


class NotPositiveDefinite(CasimirLabError, ValueError):
    """A positive-definite matrix was required."""


class InternalConsistencyError(CasimirLabError, RuntimeError):
    """An internal exact identity failed; results would be meaningless."""
