"""Exception hierarchy shared by all modules."""


class YBDynError(Exception):
    pass


class DomainError(YBDynError, ValueError):
    """Scalar argument outside its admissible range."""


class NonHermitianInput(YBDynError, ValueError):
    pass


class InvalidDensity(YBDynError, ValueError):
    """Matrix is not a valid two-qubit density matrix."""


class NonHermitian(InvalidDensity, NonHermitianInput):
    pass


class TraceNotOne(InvalidDensity):
    pass


class NotPSD(InvalidDensity):
    pass


class NotXState(YBDynError, ValueError):
    pass


class NotNormalized(YBDynError, ValueError):
    pass


class SingularComposition(YBDynError, ZeroDivisionError):
    """Rational composition rule hit a vanishing denominator."""


class DegenerateBasis(YBDynError, ValueError):
    pass


class ZeroScaleError(YBDynError, ValueError):
    """Time scaling constant (B or J) is zero for a nonzero time grid."""


class NoOracle(YBDynError, LookupError):
    """No closed-form expression exists for the requested (model, state) pair."""
