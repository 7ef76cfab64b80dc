"""Exception types shared across the package."""


class CastelnuovoError(ValueError):
    """Base class for every domain error raised by this package."""


class SizeExceededError(CastelnuovoError):
    """An exhaustive search was asked to run past its configured cap."""


class DimensionMismatchError(CastelnuovoError):
    """A Schubert problem is not zero-dimensional."""


class DegenerateConditionError(CastelnuovoError):
    """A condition is satisfied by everything, or an input is not in general position."""


class RhoNonzeroError(CastelnuovoError):
    def __init__(self, rho):
        super().__init__(f"Brill-Noether number is nonzero: rho={rho}")
        self.rho = rho


class MixedFieldError(CastelnuovoError):
    """Entries of one computation live in different fields."""


class CoincidentParameterError(CastelnuovoError):
    """Two curve parameters that must be distinct coincide."""


class NonReducedPencilError(DegenerateConditionError):
    """The Plücker quadric vanishes on the whole pencil, so the solution set is infinite."""
