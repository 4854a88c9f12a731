"""Exception hierarchy shared by the library and the command line."""


class WeierstrassError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(WeierstrassError, ValueError):
    """Malformed input: bad parameters, wrong vector length, empty set..."""


class CurveError(InvalidArgument):
    """Curve parameters violate the family hypotheses."""


class LatticeOverflowError(WeierstrassError, ArithmeticError):
    """An integer left the signed 64-bit range."""


class FloorUndefined(WeierstrassError, ArithmeticError):
    """The floor of a divisor with zero-dimensional Riemann-Roch space."""


class CapExceeded(WeierstrassError, RuntimeError):
    """An enumeration or scan would exceed its configured size limit."""


class OracleFailure(WeierstrassError, AssertionError):
    """A brute-force check found a contradiction (non-unique minimiser, ...)."""
