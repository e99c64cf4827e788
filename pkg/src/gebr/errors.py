"""Exception hierarchy for the gebr package."""


class GebrError(Exception):
    """Base class for all package errors."""


class ModulusMismatch(GebrError):
    """Operands live in different quotient rings."""


class NotInvertible(GebrError):
    """Ring element has no inverse; carries the offending gcd.

    The gcd is a nontrivial common divisor of the element and the ring
    modulus, as a coefficient array (x^0 first).
    """

    def __init__(self, msg, gcd=None):
        super().__init__(msg)
        self.gcd = gcd


class ParamError(GebrError):
    """Invalid code parameters."""


class NotPrime(ParamError):
    pass


class GNotDivisor(ParamError):
    """g(x) does not divide 1 + x^tau + ... + x^((p-1)tau)."""


class BadShape(ParamError):
    """Parameter combination yields an impossible or degenerate array."""


class UnsolvablePattern(GebrError):
    """Erasure pattern inside a column is not repairable."""


class SingularModH(GebrError):
    """Linear system is singular modulo the h-type factor; carries the gcd."""

    def __init__(self, msg, gcd=None):
        super().__init__(msg)
        self.gcd = gcd


class NoUnitPivot(SingularModH):
    """Elimination stalled and the determinant is not a unit either."""


class InsufficientKnowns(GebrError):
    """Some residue class has no known coefficient to anchor the lift."""


class InconsistentKnowns(GebrError):
    """Two known coefficients in one residue class disagree."""


class TooManyErasures(GebrError):
    pass


class TooManyLines(GebrError):
    pass


class UnsupportedParams(GebrError):
    """Operation is only defined for a restricted parameter family."""


class GNotInvertible(GebrError):
    """Line-recovery matrix is singular; carries the determinant gcd."""

    def __init__(self, msg, gcd=None):
        super().__init__(msg)
        self.gcd = gcd


class NotCoprime(GebrError):
    """Slope offset shares a factor with the ring length."""


class WitnessCheckFailed(GebrError):
    """Internal guard: a constructed witness failed verification."""


class TooLarge(GebrError):
    """Instance exceeds the exhaustive oracle's configured bound."""


class ContainerError(GebrError):
    """Malformed container bytes or CRC mismatch."""
