"""Exception hierarchy.

Every failure mode named in an operation contract gets its own class so
callers can catch precisely; all inherit from SatGenusError.
"""


class SatGenusError(Exception):
    """Base class for all errors raised by this package."""


# exactalg
class NotSymmetric(SatGenusError):
    """Matrix or Laurent polynomial lacks the required symmetry."""


# seifert
class NonSquare(SatGenusError):
    """Matrix is not square."""


class CorankMismatch(SatGenusError):
    """corank(V - V^T) over the rationals differs from components - 1."""


class NotUnimodularSkew(SatGenusError):
    """The nondegenerate part of V - V^T is not unimodular."""


class OddSize(SatGenusError):
    """A block that must have even size does not."""


class NotUnimodular(SatGenusError):
    """Basis change matrix does not have determinant +-1."""


class SizeMismatch(SatGenusError):
    """Dimensions of the operands are incompatible."""


class NotSkew(SatGenusError):
    """Matrix is not skew-symmetric."""


# satellite
class NegativeWinding(SatGenusError):
    """Winding number must be nonnegative here; reverse the pattern first."""


class MultiComponentCompanion(SatGenusError):
    """Companion matrices must have exactly one component."""


class MissingCertificate(SatGenusError):
    """A required trivial-block certificate was not supplied."""


class CertificateInvalid(SatGenusError):
    """Certificate fails verification against its matrix."""


class VerificationFailed(SatGenusError):
    """A machine check that should always succeed did not: implementation bug."""


# invariants
class NotRegular(SatGenusError):
    """The evaluation point is a root of the relevant Alexander polynomial."""


class OmegaIsOne(SatGenusError):
    """Signatures are undefined at omega = 1."""


class MultiComponent(SatGenusError):
    """Operation requires a knot (single component) Seifert matrix."""


# bounds
class EvenParameter(SatGenusError):
    """Cable parameters p, q must be odd."""


# cli / file formats
class FormatError(SatGenusError):
    """Malformed input file (exit code 2)."""


class ValidationError(SatGenusError):
    """Well-formed file whose contents violate an invariant (exit code 2)."""
