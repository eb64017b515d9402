"""Domain errors with stable machine-readable categories.

Every error raised by the library carries a ``category`` string, which the
CLI echoes verbatim so failures are machine-matchable rather than
stack-trace-only.
"""

from __future__ import annotations


class DomainError(Exception):
    """Base class for all errors originating in this library."""

    category = "domain-error"


class ParseError(DomainError):
    """Malformed polynomial text."""

    category = "parse-error"


class InhomogeneousError(DomainError):
    """Polynomial text mixes monomials of different total degrees."""

    category = "inhomogeneous"


class DegreeMismatchError(DomainError):
    """A form has the wrong degree for the requested operation."""

    category = "degree-mismatch"


class SpaceMismatchError(DomainError):
    """Primal and dual forms were mixed in one operation."""

    category = "space-mismatch"


class MatrixShapeError(DomainError):
    """Matrix dimensions are invalid for the requested operation."""

    category = "matrix-shape"


class ResultantInputError(DomainError):
    """Both resultant arguments are identically zero."""

    category = "resultant-input"


class InvalidPointError(DomainError):
    """A projective point must have at least one nonzero coordinate."""

    category = "invalid-point"


class ZeroInputError(DomainError):
    """An argument that must be nonzero was zero."""

    category = "zero-input"


class ConicRankError(DomainError):
    """The conic's Gram matrix does not have rank exactly 2."""

    category = "conic-rank"


class SingularCurveError(DomainError):
    """The operation requires a smooth curve but the input is singular
    (or so degenerate that the computation collapses)."""

    category = "singular-curve"


class CayleyanSingularError(DomainError):
    """The jumping-line curve is singular, so reconstruction cannot
    disambiguate the source cubic."""

    category = "cayleyan-singular"


class NotHessePencilError(DomainError):
    """The input form is not a member of the Hesse pencil in the chosen
    coordinates; the caller must adapt the basis first."""

    category = "not-hesse-pencil"


class InconsistentInvariantsError(DomainError):
    """No candidate cubic matches the supplied pair of invariants."""

    category = "inconsistent-invariants"


class NumericRankError(DomainError):
    """A numeric Gram matrix failed the rank-2 test (point off the Hessian
    curve, or polar conic degenerated further)."""

    category = "numeric-rank"


class InsufficientSamplesError(DomainError):
    """Too few usable samples survived filtering to report a verdict."""

    category = "insufficient-samples"
