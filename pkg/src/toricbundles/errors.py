"""Domain errors shared across the package.

Every error a caller is expected to handle derives from ToricError, so the
command line can map any domain failure to a single diagnostic line and exit
code.  Errors that refine a builtin category also subclass the builtin.
"""


class ToricError(Exception):
    """Base class for every domain error raised by this package."""


class IndexOutOfRange(ToricError, IndexError):
    """A symmetric-function or coefficient index exceeds the vector length."""


class LengthMismatch(ToricError, ValueError):
    """Two vectors that must have equal length do not."""


class ZeroVector(ToricError, ValueError):
    """An operation that needs a nonzero twisting vector received zero."""


class InvalidKappa(ToricError, ValueError):
    """The size parameter does not exceed sigma_1(a) - s."""


class Unbounded(ToricError):
    """The polyhedron has a recession direction (or its conormals do not span)."""


class NotSimple(ToricError):
    """Some vertex lies on more facets than the ambient dimension."""


class NotABundle(ToricError):
    """The polytope is not equivalent to any projective-bundle normal form."""


class CapRequired(ToricError):
    """An s = 1 enumeration is infinite and needs an explicit sigma_1 cap."""


class ParityError(ToricError, ValueError):
    """sigma_1 of the two vectors differ by a non-multiple of r + 1."""


class CertificateInvalid(ToricError):
    """A generated family certificate failed one of its own checks."""
