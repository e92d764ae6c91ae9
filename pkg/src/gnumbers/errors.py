"""Exception hierarchy shared by every module of the package."""


class GNumberError(Exception):
    """Base class for all domain errors raised by :mod:`gnumbers`."""


class SingularGNumber(GNumberError):
    """The g-number has (numerically) zero determinant, so no inverse exists."""


class ZeroScalarParabolic(SingularGNumber):
    """A parabolic g-number with vanishing scalar part has no Euler form."""


class NotNilpotent(GNumberError):
    pass


class DegenerateNilpotent(GNumberError):
    pass


class NotIdempotent(GNumberError):
    pass


class ScalarIdempotent(GNumberError):
    """0 and 1 are idempotent but carry no null basis."""


class OffIdempotentVariety(GNumberError):
    pass


class NotAVector(GNumberError):
    pass


class ScalarInput(GNumberError):
    pass


class ZeroVectorPart(GNumberError):
    pass


class ComplexInputForG20(GNumberError):
    pass


class SignatureMismatch(GNumberError):
    pass


class SingularMatrix(GNumberError):
    pass


class IdentityViolation(GNumberError):
    """Two independent routes to the same quantity disagreed."""
