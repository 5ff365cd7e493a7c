"""Exception hierarchy shared across the package."""


class QuasiOrthoError(Exception):
    """Base class for every error raised by quasiortho."""


class ReduciblePolynomial(QuasiOrthoError, ValueError):
    pass


class DegreeMismatch(QuasiOrthoError, ValueError):
    pass


class DivisionByZero(QuasiOrthoError, ZeroDivisionError):
    pass


class NotLatin(QuasiOrthoError, ValueError):
    """A cyclic rectangle would repeat a value inside some column."""


class DimensionMismatch(QuasiOrthoError, ValueError):
    pass


class FieldMismatch(QuasiOrthoError, ValueError):
    pass


class OddDimension(QuasiOrthoError, ValueError):
    pass


class TripletNotFound(QuasiOrthoError, LookupError):
    """No (n, k, rot) triplet yields orthogonal incidence matrices for n."""


class BadPair(QuasiOrthoError, ValueError):
    """Substitution pair (a, b) is not two distinct nonzero field elements."""


class SingularSystem(QuasiOrthoError, ArithmeticError):
    pass


class Singular(QuasiOrthoError, ArithmeticError):
    """Matrix has rank < n over F2."""


class ParseError(QuasiOrthoError, ValueError):
    pass
