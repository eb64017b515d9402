"""Sheaf-theoretic invariants of a smooth plane cubic, computed as exact
linear algebra on coefficient vectors.

A line, given by a nonzero linear form alpha, jumps exactly when the six
conics z0*alpha, z1*alpha, z2*alpha, d0(f), d1(f), d2(f) are linearly
dependent; letting alpha vary symbolically turns that 6x6 determinant into
a cubic in the dual plane, the Cayleyan curve.  The degree-3 part of the
Jacobi ideal of f is a hyperplane in the 10-dimensional space of cubics,
and its normal vector is the second reconstruction invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DegreeMismatchError, SingularCurveError, ZeroInputError
from .forms import (
    DUAL,
    TernaryForm,
    coefficient_vector,
    monomial_basis,
    partial_derivative,
    variable,
)
from .linalg import ExactMatrix, det_form_matrix

# Index of the monomial z0*z1*z2 within the degree-3 graded-lex basis; the
# canonical hyperplane normal is scaled to 1 there.
PRODUCT_INDEX = monomial_basis(3).index((1, 1, 1))

HyperplaneNormal = tuple[Fraction, ...]


@dataclass(frozen=True)
class ChernData:
    """First and second Chern numbers of the twisted logarithmic sheaf for a
    curve of degree d and twist k:

        c1 = 3 - d + 2k
        c2 = d^2 - 3d + 3 + k^2 + (3 - d)k
    """

    c1: int
    c2: int
    d: int
    k: int


def chern_data(d: int, k: int) -> ChernData:
    if d < 1:
        raise DegreeMismatchError(f"curve degree must be >= 1, got {d}")
    return ChernData(
        c1=3 - d + 2 * k,
        c2=d * d - 3 * d + 3 + k * k + (3 - d) * k,
        d=d,
        k=k,
    )


def _check_cubic_and_alpha(f: TernaryForm, alpha: TernaryForm) -> None:
    if f.degree != 3:
        raise DegreeMismatchError(f"need a cubic, got degree {f.degree}")
    if alpha.is_zero():
        raise ZeroInputError("the line form alpha must be nonzero")
    if alpha.degree != 1:
        raise DegreeMismatchError(f"alpha must be linear, got degree {alpha.degree}")


def jumping_matrix(f: TernaryForm, alpha: TernaryForm) -> ExactMatrix:
    """The 6x6 matrix whose columns are the degree-2 coefficient vectors of
    z0*alpha, z1*alpha, z2*alpha, d0(f), d1(f), d2(f), in that order."""
    _check_cubic_and_alpha(f, alpha)
    columns = [coefficient_vector(variable(i, f.space) * alpha) for i in range(3)]
    columns += [coefficient_vector(partial_derivative(f, i)) for i in range(3)]
    return ExactMatrix.from_columns(columns)


def jumping_line_test(f: TernaryForm, alpha: TernaryForm) -> bool:
    """True exactly when the line alpha = 0 is a jumping line of the
    logarithmic sheaf of the smooth cubic f."""
    return jumping_matrix(f, alpha).rank() < 6


def splitting_type(f: TernaryForm, alpha: TernaryForm) -> tuple[int, int]:
    """Restriction type of the normalized sheaf to the line: (-1, 1) on a
    jumping line, (0, 0) otherwise."""
    return (-1, 1) if jumping_line_test(f, alpha) else (0, 0)


def cayleyan_cubic(f: TernaryForm) -> TernaryForm:
    """The jumping-line locus of f as an exact cubic in dual coordinates.

    Computed as the determinant of the jumping matrix with alpha symbolic,
    expanded by generalized Laplace along the three constant columns (the
    partial-derivative columns), so each summand is a rational 3x3 minor
    times a 3x3 determinant of dual linear forms.  The overall sign is fixed
    by the column order z0*a, z1*a, z2*a, d0 f, d1 f, d2 f.
    """
    if f.degree != 3:
        raise DegreeMismatchError(f"need a cubic, got degree {f.degree}")

    # Symbolic block: entry (row m, col i) is the dual linear form giving
    # the coefficient of basis monomial m in z_i * (a0 z0 + a1 z1 + a2 z2);
    # the product z_i z_j contributes a_j to the row of that monomial.
    basis2 = monomial_basis(2)
    symbolic = [[TernaryForm(1, {}, DUAL) for _ in range(3)] for _ in range(6)]
    for i in range(3):
        for j in range(3):
            mono = [0, 0, 0]
            mono[i] += 1
            mono[j] += 1
            row = basis2.index(tuple(mono))
            symbolic[row][i] = symbolic[row][i] + variable(j, DUAL)

    const_block = [coefficient_vector(partial_derivative(f, i)) for i in range(3)]
    const_rows = [[const_block[i][r] for i in range(3)] for r in range(6)]

    total = TernaryForm(3, {}, DUAL)
    for rows in combinations(range(6), 3):
        const_minor = ExactMatrix([const_rows[r] for r in rows]).determinant()
        if const_minor == 0:
            continue
        complement = [r for r in range(6) if r not in rows]
        sym_minor = det_form_matrix([symbolic[r] for r in complement])
        if sym_minor.is_zero():
            continue
        term = sym_minor.scale(const_minor)
        if sum(rows) % 2 == 1:
            term = -term
        total = total + term
    if total.is_zero():
        raise SingularCurveError(
            "jumping-line determinant vanishes identically; the cubic is degenerate"
        )
    return total


def _syzygy_matrix(f: TernaryForm, k: int) -> ExactMatrix:
    """Matrix of (g0, g1, g2) -> sum g_i * d_i(f) from triples of degree
    (k+1) forms to degree (k+3) forms, columns ordered with the partial
    index outer and the graded-lex monomial of g inner."""
    partials = [partial_derivative(f, i) for i in range(3)]
    columns = []
    for i in range(3):
        for mono in monomial_basis(k + 1):
            g = TernaryForm(k + 1, {mono: 1}, f.space)
            columns.append(coefficient_vector(g * partials[i], k + 3))
    return ExactMatrix.from_columns(columns)


def canonical_normal(vector: Sequence[Fraction]) -> HyperplaneNormal:
    """Scale a hyperplane normal so its z0*z1*z2 entry is 1; when that entry
    vanishes, scale the first nonzero entry (graded-lex order) to 1."""
    v = tuple(Fraction(x) for x in vector)
    pivot = v[PRODUCT_INDEX]
    if pivot == 0:
        pivot = next((x for x in v if x != 0), None)
        if pivot is None:
            raise ZeroInputError("hyperplane normal must be nonzero")
    return tuple(x / pivot for x in v)


def jacobi_degree3(f: TernaryForm) -> HyperplaneNormal:
    """Normal vector of the degree-3 part of the Jacobi ideal of a smooth
    cubic, as a canonical 10-vector over the graded-lex cubic basis.

    The multiplication map from triples of linear forms into cubics is
    injective for smooth f, so its image is a hyperplane; the normal spans
    the kernel of the transposed 10x9 matrix.  Rank below 9 signals a
    non-smooth input and raises.
    """
    if f.degree != 3:
        raise DegreeMismatchError(f"need a cubic, got degree {f.degree}")
    matrix = _syzygy_matrix(f, 0)
    if matrix.rank() < 9:
        raise SingularCurveError(
            "multiplication by the partials is not injective; cubic is not smooth"
        )
    kernel = matrix.transpose().kernel_basis()
    return canonical_normal(kernel[0])


def is_jumping_cubic(f: TernaryForm, g: TernaryForm) -> bool:
    """True exactly when g lies in the degree-3 hyperplane cut out by the
    Jacobi ideal of f (the locus where the restricted sheaf has a section)."""
    if g.is_zero():
        raise ZeroInputError("test cubic g must be nonzero")
    if g.degree != 3:
        raise DegreeMismatchError(f"g must be a cubic, got degree {g.degree}")
    normal = jacobi_degree3(f)
    pairing = sum(
        (n * c for n, c in zip(normal, coefficient_vector(g))), Fraction(0)
    )
    return pairing == 0


def d0_graded_dim(f: TernaryForm, k: int) -> int:
    """Dimension of the space of degree-k polynomial derivations
    annihilating f: the kernel of (g_i) -> sum g_i d_i(f) on triples of
    degree (k+1) forms."""
    if f.degree != 3:
        raise DegreeMismatchError(f"need a cubic, got degree {f.degree}")
    if k < 0:
        raise DegreeMismatchError(f"twist k must be >= 0, got {k}")
    matrix = _syzygy_matrix(f, k)
    return matrix.cols - matrix.rank()


def is_stable(f: TernaryForm) -> bool:
    """True exactly when the normalized logarithmic sheaf has no global
    section, i.e. no nonzero triple of linear forms pairs to zero against
    the partials of f.

    For smooth cubics this is equivalent to stability; for singular inputs
    the boolean only reports triviality of that kernel, which the caller
    must interpret (stability of the sheaf along singular curves is not
    decided here).
    """
    return d0_graded_dim(f, 0) == 0
