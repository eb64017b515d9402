"""Reconstruction of a Hesse-pencil cubic from its two computable sheaf
invariants, and the family demonstrating where reconstruction must fail.

The forward map sends a smooth pencil member to its jumping-line cubic (in
dual coordinates) and the normal vector of the degree-3 Jacobi hyperplane.
Reading the dual cubic in normalized Hesse form yields a parameter s; the
source parameter is then one of at most three roots of x^3 - 3sx + 2 = 0,
and the hyperplane normal picks out the right one.  When the dual cubic is
singular (s^3 = 1, equivalently j = 0, or the degenerate product-of-lines
case) the candidates cannot be separated and reconstruction refuses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .cubics import hesse_cubic, hesse_pencil_split
from .errors import (
    CayleyanSingularError,
    InconsistentInvariantsError,
    NotHessePencilError,
    SingularCurveError,
    ZeroInputError,
)
from .forms import (
    DUAL,
    Scalar,
    TernaryForm,
    monomial_basis,
    monomial_form,
    projectively_equal,
    vectors_projectively_equal,
)
from .sheaf import HyperplaneNormal, cayleyan_cubic, jacobi_degree3


@dataclass(frozen=True)
class SheafInvariants:
    """The two reconstruction invariants of a cubic: its jumping-line cubic
    in dual coordinates and the canonical Jacobi-hyperplane normal."""

    cayleyan: TernaryForm
    hyperplane: HyperplaneNormal


@dataclass(frozen=True)
class CandidateSet:
    """Solutions of x^3 - 3sx + 2 = 0: the rational roots exactly, plus the
    residual cofactor (with no rational roots) in descending coefficients."""

    exact_roots: tuple[Fraction, ...]
    residual: tuple[Fraction, ...]


def cayleyan_hesse_param(t: Scalar) -> Fraction:
    """Hesse parameter s = (t^3 + 2) / (3t) of the jumping-line cubic of the
    pencil member at t."""
    t = Fraction(t)
    if t**3 == 1:
        raise SingularCurveError(f"pencil member at t = {t} is singular")
    if t == 0:
        raise CayleyanSingularError(
            "at t = 0 the jumping-line cubic degenerates to a0*a1*a2 = 0; "
            "no finite Hesse parameter exists"
        )
    return (t**3 + 2) / (3 * t)


def forward_invariants(t: Scalar) -> SheafInvariants:
    """Both sheaf invariants of the smooth pencil member at t."""
    t = Fraction(t)
    if t**3 == 1:
        raise SingularCurveError(f"pencil member at t = {t} is singular")
    f = hesse_cubic(t)
    return SheafInvariants(cayleyan=cayleyan_cubic(f), hyperplane=jacobi_degree3(f))


def _rational_roots(coeffs: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """All rational roots (with multiplicity) of a univariate polynomial
    given by descending coefficients, and the deflated residual cofactor.

    Classic rational-root search: after clearing denominators, any rational
    root p/q in lowest terms has p dividing the constant term and q dividing
    the leading coefficient.  Exact synthetic division peels roots off until
    none remain.
    """

    def divisors(n: int) -> list[int]:
        n = abs(n)
        small: list[int] = []
        large: list[int] = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                small.append(d)
                if d * d != n:
                    large.append(n // d)
            d += 1
        return small + large[::-1]

    def candidates(poly: list[Fraction]) -> list[Fraction]:
        lcm = 1
        for c in poly:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in poly]
        while ints and ints[0] == 0:
            ints = ints[1:]
        if not ints:
            return []
        lead, const = ints[0], ints[-1]
        if const == 0:
            return [Fraction(0)]
        found = set()
        for p in divisors(const):
            for q in divisors(lead):
                found.add(Fraction(p, q))
                found.add(Fraction(-p, q))
        return sorted(found)

    poly = [Fraction(c) for c in coeffs]
    roots: list[Fraction] = []
    while len(poly) > 1:
        root = next(
            (
                r
                for r in candidates(poly)
                if sum(c * r ** (len(poly) - 1 - i) for i, c in enumerate(poly)) == 0
            ),
            None,
        )
        if root is None:
            break
        roots.append(root)
        deflated = [poly[0]]
        for c in poly[1:-1]:
            deflated.append(c + root * deflated[-1])
        poly = deflated
    return roots, poly


def reconstruct_candidates(s: Scalar) -> CandidateSet:
    """All parameters x whose jumping-line cubic has Hesse parameter s,
    i.e. the roots of x^3 - 3sx + 2 = 0; rational roots exactly, the rest
    packaged as the residual factor."""
    s = Fraction(s)
    roots, residual = _rational_roots(
        [Fraction(1), Fraction(0), -3 * s, Fraction(2)]
    )
    unique = tuple(sorted(set(roots)))
    return CandidateSet(exact_roots=unique, residual=tuple(residual))


def _dual_hesse_parameter(cayleyan: TernaryForm) -> Fraction:
    """Read the normalized Hesse parameter s off a dual cubic, requiring it
    to be a pencil member (sum of cubes minus 3s times the product) with
    nonzero cube coefficient."""
    if cayleyan.space != DUAL:
        raise NotHessePencilError("the jumping-line cubic must live in dual coordinates")
    split = hesse_pencil_split(cayleyan)
    if split is None:
        raise NotHessePencilError(
            "jumping-line cubic is not a Hesse pencil member in these "
            "coordinates; adapt the basis first"
        )
    lam, mu = split
    if lam == 0:
        raise CayleyanSingularError(
            "jumping-line cubic is the product of the three coordinate "
            "lines; the source family shares identical invariants"
        )
    return -mu / (3 * lam)


def reconstruct(inv: SheafInvariants) -> Fraction:
    """Recover the unique pencil parameter whose invariants match.

    The dual cubic determines s (refusing when it is singular: that is the
    j = 0 failure locus), the candidate equation x^3 - 3sx + 2 = 0 yields at
    most three parameters, and the hyperplane normal of each candidate is
    compared projectively with the given one; exactness makes the match
    unique whenever the dual cubic is smooth.
    """
    s = _dual_hesse_parameter(inv.cayleyan)
    if s**3 == 1:
        raise CayleyanSingularError(
            f"jumping-line cubic with parameter s = {s} is singular (s^3 = 1); "
            "reconstruction cannot separate the candidates"
        )
    candidates = reconstruct_candidates(s)
    matches = [
        x
        for x in candidates.exact_roots
        if x**3 != 1
        and vectors_projectively_equal(
            jacobi_degree3(hesse_cubic(x)), inv.hyperplane
        )
    ]
    if not matches:
        raise InconsistentInvariantsError(
            "no candidate parameter reproduces the supplied hyperplane normal"
        )
    return matches[0]


def _upoly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def cayleyan_singularity_identity() -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Both sides of the exact identity (t^3+2)^3 - (3t)^3 = (t^3-1)^2 * (t^3+8)
    as coefficient tuples in ascending powers of t.

    The left side is the numerator of s^3 - 1 for s = (t^3+2)/(3t), so its
    factorization shows the jumping-line cubic is singular exactly at the
    singular members (t^3 = 1) and the j = 0 locus (t^3 = -8, plus t = 0).
    """
    t3_plus_2 = (Fraction(2), Fraction(0), Fraction(0), Fraction(1))
    lhs = list(_upoly_mul(_upoly_mul(t3_plus_2, t3_plus_2), t3_plus_2))
    lhs[3] -= 27
    t3_minus_1 = (Fraction(-1), Fraction(0), Fraction(0), Fraction(1))
    t3_plus_8 = (Fraction(8), Fraction(0), Fraction(0), Fraction(1))
    rhs = _upoly_mul(_upoly_mul(t3_minus_1, t3_minus_1), t3_plus_8)
    return tuple(lhs), tuple(rhs)


def counterexample_check(a: Scalar, b: Scalar, c: Scalar) -> bool:
    """True when the cubic a*z0^3 + b*z1^3 + c*z2^3 has the invariant pair
    shared by the whole family: jumping-line cubic a0*a1*a2 = 0 and the
    hyperplane normal supported on the z0*z1*z2 coefficient alone."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 or b == 0 or c == 0:
        raise ZeroInputError("family coefficients a, b, c must all be nonzero")
    f = TernaryForm(3, {(3, 0, 0): a, (0, 3, 0): b, (0, 0, 3): c})
    product_dual = monomial_form((1, 1, 1), 1, DUAL)
    if not projectively_equal(cayleyan_cubic(f), product_dual):
        return False
    normal = jacobi_degree3(f)
    expected = tuple(
        Fraction(1 if mono == (1, 1, 1) else 0) for mono in monomial_basis(3)
    )
    return vectors_projectively_equal(normal, expected)
