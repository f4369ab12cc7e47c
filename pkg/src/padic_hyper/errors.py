"""Exception types shared across the library."""

from __future__ import annotations


class PadicError(Exception):
    """Base class for every error raised by this package."""

    kind = "PadicError"


class NotPIntegral(PadicError):
    """A rational number has a denominator divisible by p."""

    kind = "NotPIntegral"


class NotAUnit(PadicError):
    """A value expected to be a p-adic unit is divisible by p."""

    kind = "NotAUnit"


class NotAResidue(PadicError):
    """A square root was requested for a quadratic non-residue."""

    kind = "NotAResidue"


class NotRepresentable(PadicError):
    """A prime has no representation by the requested binary quadratic form."""

    kind = "NotRepresentable"


class DenominatorDivisible(PadicError):
    """A harmonic sum would divide by a multiple of p."""

    kind = "DenominatorDivisible"


class ModulusMismatch(PadicError):
    """Arithmetic was attempted between residues with different moduli."""

    kind = "ModulusMismatch"


class PrimeOutOfRange(PadicError):
    """The prime is not an odd prime within the supported bound."""

    kind = "PrimeOutOfRange"


class PrecisionLoss(PadicError):
    """The guard precision of a series evaluation was insufficient."""

    kind = "PrecisionLoss"


class NonTerminating(PadicError):
    """An exact rational evaluation was requested for a non-terminating series."""

    kind = "NonTerminating"


class LowerParameterPole(PadicError):
    """A lower Pochhammer factor vanishes exactly."""

    kind = "LowerParameterPole"


class DegreeOverflow(PadicError):
    """A polynomial expansion exceeded the supported degree."""

    kind = "DegreeOverflow"


class UnknownTheorem(PadicError):
    """No registry entry has the requested id."""

    kind = "UnknownTheorem"


class OrderTooSmall(PadicError):
    """A q-expansion order is too small for the requested coefficient."""

    kind = "OrderTooSmall"
