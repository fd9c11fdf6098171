"""Exception hierarchy.

Every failure raised by the verification routines derives from
:class:`StructureError`, itself a :class:`ValueError`, so callers that only
care about "the input does not carry the requested structure" can catch a
single type.
"""


class StructureError(ValueError):
    """The input does not carry the requested geometric structure."""


class DimensionError(StructureError):
    """Ambient dimensions, degrees or types do not match."""


class DegenerateFormError(StructureError):
    """A two-form that must be non-degenerate is not."""


class NoLeeFormError(StructureError):
    """No closed one-form solves ``d omega = omega ^ theta``."""


class NotAPairError(StructureError):
    """The one-forms do not form a (generalized) contact pair."""


class NotAlmostComplexError(StructureError):
    """An endomorphism does not square to minus the identity."""


class NotPositiveDefiniteError(StructureError):
    """A metric is asymmetric or not positive definite."""


class SplittingError(StructureError):
    """An endomorphism does not preserve a required splitting."""


class PreconditionError(StructureError):
    """A documented precondition of an operation is violated."""


class LinearSystemError(StructureError):
    """An exact linear system has no solution or no unique solution."""


class InconsistentSystemError(LinearSystemError):
    pass


class UnderdeterminedSystemError(LinearSystemError):
    pass
