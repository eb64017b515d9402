"""Classical plane-cubic constructions: the Hesse pencil, first polars,
Hessian curves, singular points of degenerate conics, smoothness testing,
and the j-invariant along the Hesse pencil.

Everything here is exact except the verdict semantics of the randomized
smoothness test: a Smooth verdict is unconditionally correct, while a
failure to certify is reported as ProbablySingular together with the retry
count.  Hesse-pencil members bypass the randomized path entirely via the
exact criterion t^3 != 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    ConicRankError,
    DegreeMismatchError,
    InvalidPointError,
    SingularCurveError,
    ZeroInputError,
)
from .forms import (
    Scalar,
    TernaryForm,
    partial_derivative,
    substitute_linear,
    zero_form,
)
from .linalg import ExactMatrix, det_form_matrix, sylvester_resultant

SMOOTH = "smooth"
SINGULAR = "singular"
PROBABLY_SINGULAR = "probably-singular"

_CUBE_MONOS = ((3, 0, 0), (0, 3, 0), (0, 0, 3))
_PRODUCT_MONO = (1, 1, 1)


@dataclass(frozen=True)
class SmoothnessVerdict:
    """Outcome of the smoothness test.

    Smooth and Singular are certified; ProbablySingular means every retry of
    the randomized resultant chain vanished, which is overwhelming (but not
    conclusive) evidence of a singular curve.
    """

    status: str
    witness: str | None = None

    @property
    def is_smooth(self) -> bool:
        return self.status == SMOOTH


def hesse_cubic(t: Scalar) -> TernaryForm:
    """The pencil member z0^3 + z1^3 + z2^3 - 3t*z0*z1*z2."""
    t = Fraction(t)
    terms = {mono: Fraction(1) for mono in _CUBE_MONOS}
    if t != 0:
        terms[_PRODUCT_MONO] = -3 * t
    return TernaryForm(3, terms)


def hesse_pencil_split(f: TernaryForm) -> tuple[Fraction, Fraction] | None:
    """Decompose f as lam*(sum of cubes) + mu*(product of variables).

    Returns None when f is not in the pencil: any monomial outside the four
    pencil monomials, or unequal coefficients on the three pure cubes, or a
    zero form.  Works in either variable space.
    """
    if f.is_zero() or f.degree != 3:
        return None
    allowed = set(_CUBE_MONOS) | {_PRODUCT_MONO}
    if any(mono not in allowed for mono in f.terms):
        return None
    cubes = [f.coefficient(m) for m in _CUBE_MONOS]
    if cubes[0] != cubes[1] or cubes[1] != cubes[2]:
        return None
    return cubes[0], f.coefficient(_PRODUCT_MONO)


def hesse_parameter(f: TernaryForm) -> Fraction | None:
    """The parameter t with f proportional to the Hesse cubic at t, or None
    when f is not a pencil member with nonzero cube coefficient."""
    split = hesse_pencil_split(f)
    if split is None or split[0] == 0:
        return None
    lam, mu = split
    return -mu / (3 * lam)


def canonical_point(coords: Sequence[Scalar]) -> tuple[Fraction, Fraction, Fraction]:
    """Canonical representative of a projective point: last nonzero
    coordinate scaled to 1."""
    point = tuple(Fraction(c) for c in coords)
    if len(point) != 3 or all(c == 0 for c in point):
        raise InvalidPointError("projective point needs a nonzero coordinate")
    pivot = max(i for i, c in enumerate(point) if c != 0)
    return tuple(c / point[pivot] for c in point)


def first_polar(f: TernaryForm, q: Sequence[Scalar]) -> TernaryForm:
    """The polar conic a0*d0(f) + a1*d1(f) + a2*d2(f) of a cubic at a point.

    Linear in the coordinates of q, which are used as given (no projective
    rescaling).
    """
    if f.degree != 3:
        raise DegreeMismatchError(f"first polar needs a cubic, got degree {f.degree}")
    a = tuple(Fraction(c) for c in q)
    if len(a) != 3 or all(c == 0 for c in a):
        raise InvalidPointError("projective point needs a nonzero coordinate")
    polar = zero_form(2, f.space)
    for i in range(3):
        if a[i] != 0:
            polar = polar + partial_derivative(f, i).scale(a[i])
    return polar


def hessian_curve(f: TernaryForm) -> TernaryForm:
    """Determinant of the 3x3 matrix of second partials; a cubic form
    (possibly zero for degenerate inputs), taken with no normalization."""
    if f.degree != 3:
        raise DegreeMismatchError(f"Hessian needs a cubic, got degree {f.degree}")
    second = [
        [partial_derivative(partial_derivative(f, i), j) for j in range(3)]
        for i in range(3)
    ]
    return det_form_matrix(second)


def gram_matrix(conic: TernaryForm) -> ExactMatrix:
    """Symmetric 3x3 Gram matrix G of a conic, with Q(z) = z^T G z."""
    if conic.degree != 2:
        raise DegreeMismatchError(f"Gram matrix needs a conic, got degree {conic.degree}")
    g = [[Fraction(0)] * 3 for _ in range(3)]
    for (e0, e1, e2), coeff in conic.terms.items():
        support = [i for i, e in enumerate((e0, e1, e2)) if e > 0]
        if len(support) == 1:
            i = support[0]
            g[i][i] = coeff
        else:
            i, j = support
            g[i][j] = g[j][i] = coeff / 2
    return ExactMatrix(g)


def conic_singular_point(conic: TernaryForm) -> tuple[Fraction, Fraction, Fraction]:
    """The unique singular point of a rank-2 conic (a pair of distinct
    lines), as the kernel direction of the Gram matrix."""
    gram = gram_matrix(conic)
    rank = gram.rank()
    if rank == 3:
        raise ConicRankError("conic is smooth; no singular point")
    if rank <= 1:
        raise ConicRankError(
            f"conic has Gram rank {rank}; singular locus is not a single point"
        )
    kernel = gram.kernel_basis()
    return canonical_point(kernel[0])


def random_unimodular(rng: random.Random, bound: int = 9, shears: int = 6) -> list[list[int]]:
    """Random integer matrix with determinant +-1 and entries in [-bound, bound],
    built by composing row shears and sign flips from the identity."""
    m = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    for i in range(3):
        if rng.random() < 0.5:
            m[i] = [-x for x in m[i]]
    for _ in range(shears):
        i, j = rng.sample(range(3), 2)
        k = rng.choice([-2, -1, 1, 2])
        candidate = [m[i][c] + k * m[j][c] for c in range(3)]
        if all(abs(x) <= bound for x in candidate):
            m[i] = candidate
    return m


def is_smooth_cubic(
    f: TernaryForm, retries: int = 3, seed: int = 0
) -> SmoothnessVerdict:
    """Decide smoothness of a plane cubic.

    Hesse-pencil members are decided exactly (smooth iff t^3 != 1, and the
    pure-product member is singular).  Otherwise the curve is singular
    exactly when its three partial-derivative conics share a projective
    zero, which is probed by a random invertible coordinate change followed
    by iterated Sylvester resultants: a nonzero final resultant certifies
    that no common zero exists.  Each vanishing chain is retried with fresh
    coordinates; only Smooth is certified, never its complement.
    """
    if f.is_zero():
        raise ZeroInputError("smoothness test needs a nonzero cubic")
    if f.degree != 3:
        raise DegreeMismatchError(f"smoothness test needs a cubic, got degree {f.degree}")

    split = hesse_pencil_split(f)
    if split is not None:
        lam, mu = split
        if lam == 0:
            return SmoothnessVerdict(SINGULAR, "pencil member z0*z1*z2 = 0")
        t = -mu / (3 * lam)
        if t**3 == 1:
            return SmoothnessVerdict(SINGULAR, f"Hesse parameter t = {t} has t^3 = 1")
        return SmoothnessVerdict(SMOOTH, f"Hesse parameter t = {t} has t^3 != 1")

    rng = random.Random(seed)
    for attempt in range(max(retries, 1)):
        matrix = random_unimodular(rng)
        g = substitute_linear(f, matrix)
        partials = [partial_derivative(g, i) for i in range(3)]
        if any(p.is_zero() for p in partials):
            continue
        r1 = sylvester_resultant(partials[0], partials[1], 0)
        r2 = sylvester_resultant(partials[0], partials[2], 0)
        if r1.is_zero() or r2.is_zero():
            continue
        r3 = sylvester_resultant(r1, r2, 1)
        if not r3.is_zero():
            return SmoothnessVerdict(
                SMOOTH, f"nonzero resultant chain on attempt {attempt + 1}"
            )
    return SmoothnessVerdict(
        PROBABLY_SINGULAR, f"resultant chain vanished in all {max(retries, 1)} retries"
    )


def j_invariant_hesse(t: Scalar) -> Fraction:
    """j-invariant of the smooth pencil member at parameter t:
    (1/64) * t^3 * (t^3+8)^3 / (t^3-1)^3."""
    t = Fraction(t)
    t3 = t**3
    if t3 == 1:
        raise SingularCurveError(f"pencil member at t = {t} is singular (t^3 = 1)")
    return Fraction(1, 64) * t3 * (t3 + 8) ** 3 / (t3 - 1) ** 3
