"""Exception types raised across the package."""


class SymlatError(Exception):
    """Base class for all errors raised by symlat."""


class BadU(SymlatError):
    pass


class OddOrder(SymlatError):
    pass


class KindMismatch(SymlatError):
    pass


class NotAUnit(SymlatError):
    pass


class NotPositiveDefinite(SymlatError):
    pass


class ModulusTooSmall(SymlatError):
    pass


class FactorTooLarge(SymlatError):
    pass


class InvalidGLattice(SymlatError):
    pass


class NotInvertible(SymlatError):
    pass


class NotIntegral(SymlatError):
    pass


class NotPositive(SymlatError):
    pass


class HypothesisFailed(SymlatError):
    pass


class NuNotShort(SymlatError):
    pass


class InternalCheckFailed(SymlatError):
    """A self-verification failed; this indicates a bug."""


class BadInput(SymlatError):
    pass


class DegenerateV(SymlatError):
    pass
