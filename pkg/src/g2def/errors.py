"""Exception types raised across the package."""


class G2DefError(Exception):
    """Base class for all package errors."""


class DivisionByZero(G2DefError, ZeroDivisionError):
    pass


class NotInField(G2DefError, ValueError):
    """A square root (or other value) does not lie in Q(i, sqrt2, sqrt3, sqrt5)."""


class DimensionMismatch(G2DefError, ValueError):
    pass


class ParseError(G2DefError, ValueError):
    pass


class NotStable(G2DefError, ValueError):
    pass


class NotTraceless(G2DefError, ValueError):
    pass


class NotIn27(G2DefError, ValueError):
    pass


class NotSkew(G2DefError, ValueError):
    pass


class NotNearlyParallel(G2DefError, ValueError):
    pass


class InvariantViolation(G2DefError, ValueError):
    """A loaded space breaks a structural invariant; ``invariant`` names it."""

    def __init__(self, invariant, detail=""):
        self.invariant = invariant
        self.detail = detail
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)


class BadWeight(G2DefError, ValueError):
    pass


class NotAnIdeal(G2DefError, ValueError):
    pass


class WrongSpace(G2DefError, ValueError):
    pass


class ZeroTau(G2DefError, ValueError):
    pass
