"""Exception hierarchy.

Input problems raise subclasses of :class:`InvalidInputError` (a
``ValueError``); broken internal consistency raises :class:`InternalError`.
The CLI maps the two families to different exit codes.
"""


class InvalidInputError(ValueError):
    """Data that does not describe a valid object."""


class TooFewFibersError(InvalidInputError):
    """Fewer than three singular fibers."""


class NotCoprimeError(InvalidInputError):
    """A pair (alpha, beta) or a Brieskorn triple fails a coprimality condition."""


class NonNegativeEulerError(InvalidInputError):
    """Orbifold Euler number e >= 0, so the manifold is not a singularity link."""


class NotNegativeDefiniteError(InvalidInputError):
    """Intersection form is not negative definite."""


class InternalError(RuntimeError):
    """An identity that must hold by construction failed."""


class NotRationalError(InternalError):
    """A cyclotomic value expected to be rational has irrational part."""
