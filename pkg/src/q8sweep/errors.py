"""Exception types shared across the package."""


class ZeroInverse(ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class BothZero(ValueError):
    """gcd(0, 0) requested."""


class ZeroInput(ValueError):
    """Operation requires a nonzero polynomial."""


class NotSquarefree(ValueError):
    """Operation requires a squarefree polynomial."""


class ExactDivisionFailed(ArithmeticError):
    """A division that must be exact left a remainder; indicates an upstream bug."""


class SingularCurve(ValueError):
    """Curve parameter 2 or -2 names a singular member of the family."""


class StarViolated(RuntimeError):
    """The degree-counting preconditions (no root at +-2, squarefree) failed."""
