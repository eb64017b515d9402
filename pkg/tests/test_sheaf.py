from fractions import Fraction

import pytest

from logcubic.cubics import hesse_cubic
from logcubic.errors import (
    DegreeMismatchError,
    SingularCurveError,
    ZeroInputError,
)
from logcubic.forms import (
    DUAL,
    TernaryForm,
    coefficient_vector,
    linear_form,
    monomial_basis,
    monomial_form,
    parse_form,
    partial_derivative,
    projectively_equal,
    variable,
)
from logcubic.sheaf import (
    PRODUCT_INDEX,
    cayleyan_cubic,
    chern_data,
    d0_graded_dim,
    is_jumping_cubic,
    is_stable,
    jacobi_degree3,
    jumping_line_test,
    jumping_matrix,
    splitting_type,
)

from conftest import rand_fraction, rand_hesse_t
from test_linalg import naive_rank


def cayleyan_closed_form(t: Fraction) -> TernaryForm:
    """Independent construction of the jumping-line cubic of the pencil
    member at t: t*(a0^3+a1^3+a2^3) - (t^3+2)*a0*a1*a2."""
    cubes = parse_form("a0^3 + a1^3 + a2^3", DUAL)
    product = parse_form("a0*a1*a2", DUAL)
    return cubes.scale(t) - product.scale(t**3 + 2)


def rand_alpha(rng) -> TernaryForm:
    while True:
        alpha = linear_form([rand_fraction(rng) for _ in range(3)])
        if not alpha.is_zero():
            return alpha


class TestJumpingMatrix:
    def test_fermat_alpha_z0(self):
        m = jumping_matrix(hesse_cubic(0), variable(0))
        assert (m.rows, m.cols) == (6, 6)
        # Column 3 is d0(f) = 3*z0^2, exactly 3 times column 0 (z0*alpha).
        col0 = [m.entries[r][0] for r in range(6)]
        col3 = [m.entries[r][3] for r in range(6)]
        assert col3 == [3 * x for x in col0]
        assert m.rank() == 5

    def test_hesse_two_alpha_difference(self):
        m = jumping_matrix(hesse_cubic(2), parse_form("z0 - z1"))
        assert m.rank() == 5

    def test_zero_alpha_rejected(self):
        with pytest.raises(ZeroInputError):
            jumping_matrix(hesse_cubic(0), parse_form("0"))

    def test_alpha_must_be_linear(self):
        with pytest.raises(DegreeMismatchError):
            jumping_matrix(hesse_cubic(0), parse_form("z0^2"))


class TestJumpingLine:
    def test_fermat_examples(self):
        fermat = hesse_cubic(0)
        assert jumping_line_test(fermat, variable(0)) is True
        assert jumping_line_test(fermat, parse_form("z0+z1+z2")) is False

    def test_hesse_two_example(self):
        # (1, -1, 0) lies on 2*(sum of cubes) - 10*(product) = 0.
        assert jumping_line_test(hesse_cubic(2), parse_form("z0 - z1")) is True

    def test_matches_cayleyan_vanishing(self, rng):
        # The jumping criterion and the closed-form dual cubic agree exactly.
        for _ in range(6):
            t = rand_hesse_t(rng)
            f = hesse_cubic(t)
            closed = cayleyan_closed_form(t)
            for _ in range(12):
                alpha = rand_alpha(rng)
                value = closed.evaluate(coefficient_vector(alpha))
                assert jumping_line_test(f, alpha) == (value == 0)


class TestSplittingType:
    def test_jumping_and_generic(self):
        fermat = hesse_cubic(0)
        assert splitting_type(fermat, variable(0)) == (-1, 1)
        assert splitting_type(fermat, parse_form("z0+z1+z2")) == (0, 0)

    def test_section_count_is_two(self, rng):
        # h0 of O(a) + O(b) on a line is max(0, a+1) + max(0, b+1) = 2 for
        # both observed types, and a + b = 0 always.
        f = hesse_cubic(Fraction(1, 2))
        for _ in range(20):
            a, b = splitting_type(f, rand_alpha(rng))
            assert a + b == 0
            assert (a, b) in ((0, 0), (-1, 1))
            assert max(0, a + 1) + max(0, b + 1) == 2


class TestCayleyan:
    def test_fermat_is_coordinate_product(self):
        cay = cayleyan_cubic(hesse_cubic(0))
        assert cay == monomial_form((1, 1, 1), -54, DUAL)

    def test_matches_closed_form_random(self, rng):
        for _ in range(12):
            t = rand_hesse_t(rng)
            cay = cayleyan_cubic(hesse_cubic(t))
            assert cay.space == DUAL and cay.degree == 3
            assert projectively_equal(cay, cayleyan_closed_form(t))

    def test_cube_family_independent_of_coefficients(self, rng):
        target = monomial_form((1, 1, 1), 1, DUAL)
        for _ in range(8):
            a, b, c = (rand_fraction(rng) or 1 for _ in range(3))
            f = TernaryForm(3, {(3, 0, 0): a or 1, (0, 3, 0): b or 1, (0, 0, 3): c or 1})
            assert projectively_equal(cayleyan_cubic(f), target)

    def test_value_equals_jumping_determinant(self, rng):
        # Evaluating the symbolic determinant at rational alpha agrees with
        # the Bareiss determinant of the rational jumping matrix: same
        # number, same sign, at every sample point.
        for t in (Fraction(0), Fraction(2), Fraction(-3, 4)):
            f = hesse_cubic(t)
            cay = cayleyan_cubic(f)
            for _ in range(10):
                alpha = rand_alpha(rng)
                coords = coefficient_vector(alpha)
                det = jumping_matrix(f, alpha).determinant()
                assert cay.evaluate(coords) == det

    def test_vanishing_iff_rank_drop(self, rng):
        for _ in range(5):
            t = rand_hesse_t(rng)
            f = hesse_cubic(t)
            cay = cayleyan_cubic(f)
            for _ in range(10):
                alpha = rand_alpha(rng)
                vanishes = cay.evaluate(coefficient_vector(alpha)) == 0
                assert vanishes == (jumping_matrix(f, alpha).rank() < 6)

    def test_always_cubic_in_alpha(self, rng):
        for _ in range(5):
            terms = {
                mono: rand_fraction(rng)
                for mono in monomial_basis(3)
                if rng.random() < 0.5
            }
            f = TernaryForm(3, terms)
            try:
                cay = cayleyan_cubic(f)
            except SingularCurveError:
                continue
            assert cay.degree == 3
            assert all(sum(m) == 3 for m in cay.terms)

    def test_degenerate_input_raises(self):
        with pytest.raises(SingularCurveError):
            cayleyan_cubic(parse_form("z0^3"))


class TestJacobiHyperplane:
    def test_hesse_two(self):
        normal = jacobi_degree3(hesse_cubic(2))
        expected = [Fraction(0)] * 10
        expected[PRODUCT_INDEX] = Fraction(1)
        for mono in ((3, 0, 0), (0, 3, 0), (0, 0, 3)):
            expected[monomial_basis(3).index(mono)] = Fraction(2)
        assert list(normal) == expected

    def test_fermat_supported_on_product(self):
        normal = jacobi_degree3(hesse_cubic(0))
        assert normal[PRODUCT_INDEX] == 1
        assert all(x == 0 for i, x in enumerate(normal) if i != PRODUCT_INDEX)

    def test_cube_family(self, rng):
        for _ in range(6):
            coeffs = [rand_fraction(rng) or 1 for _ in range(3)]
            f = TernaryForm(
                3,
                {(3, 0, 0): coeffs[0], (0, 3, 0): coeffs[1], (0, 0, 3): coeffs[2]},
            )
            normal = jacobi_degree3(f)
            assert normal[PRODUCT_INDEX] == 1
            assert all(x == 0 for i, x in enumerate(normal) if i != PRODUCT_INDEX)

    def test_pencil_normal_shape_random(self, rng):
        # Canonical normal of the pencil member at t: 1 on the product
        # monomial, t on each pure cube, zero elsewhere.
        cube_idx = [monomial_basis(3).index(m) for m in ((3, 0, 0), (0, 3, 0), (0, 0, 3))]
        for _ in range(12):
            t = rand_hesse_t(rng)
            normal = jacobi_degree3(hesse_cubic(t))
            assert normal[PRODUCT_INDEX] == 1
            for i in cube_idx:
                assert normal[i] == t
            for i, x in enumerate(normal):
                if i != PRODUCT_INDEX and i not in cube_idx:
                    assert x == 0

    def test_singular_input_raises(self):
        with pytest.raises(SingularCurveError):
            jacobi_degree3(hesse_cubic(1))
        with pytest.raises(SingularCurveError):
            jacobi_degree3(parse_form("z0^3"))


class TestJumpingCubic:
    def test_fermat_examples(self):
        fermat = hesse_cubic(0)
        assert is_jumping_cubic(fermat, parse_form("z0^3")) is True
        assert is_jumping_cubic(fermat, parse_form("z0*z1*z2")) is False

    def test_pairing_arithmetic_at_two(self):
        # Coefficients a012 = -6 and 1 on each pure cube: -6 + 2*3 = 0.
        f = hesse_cubic(2)
        g = parse_form("z0^3 + z1^3 + z2^3 - 6*z0*z1*z2")
        assert is_jumping_cubic(f, g) is True

    def test_ideal_membership_by_construction(self, rng):
        # z_i * d_j(f) lies in the hyperplane for every i, j.
        for t in (Fraction(0), Fraction(2), Fraction(-5, 3)):
            f = hesse_cubic(t)
            for i in range(3):
                for j in range(3):
                    g = variable(i) * partial_derivative(f, j)
                    assert is_jumping_cubic(f, g) is True

    def test_zero_g_rejected(self):
        with pytest.raises(ZeroInputError):
            is_jumping_cubic(hesse_cubic(0), parse_form("0"))


class TestStability:
    def test_smooth_members_stable(self, rng):
        assert is_stable(hesse_cubic(0)) is True
        assert is_stable(hesse_cubic(2)) is True
        for _ in range(8):
            assert is_stable(hesse_cubic(rand_hesse_t(rng))) is True

    def test_singular_member_reports_kernel_dim(self):
        # Out-of-hypothesis input: the boolean only reflects the kernel, so
        # the graded dimension is reported alongside for interpretation.
        f = hesse_cubic(1)
        dim = d0_graded_dim(f, 0)
        assert is_stable(f) == (dim == 0)

    def test_graded_dims(self):
        for t in (Fraction(0), Fraction(2)):
            f = hesse_cubic(t)
            assert d0_graded_dim(f, 0) == 0
            assert d0_graded_dim(f, 1) == 3

    def test_graded_dim_against_naive_rank(self, rng):
        # Oracle: independent dense rank of the 15x18 multiplication matrix.
        from logcubic.sheaf import _syzygy_matrix

        for t in (Fraction(2), rand_hesse_t(rng)):
            matrix = _syzygy_matrix(hesse_cubic(t), 1)
            assert (matrix.rows, matrix.cols) == (15, 18)
            assert d0_graded_dim(hesse_cubic(t), 1) == 18 - naive_rank(matrix.entries)


class TestChernData:
    def test_reference_values(self):
        assert (chern_data(3, 0).c1, chern_data(3, 0).c2) == (0, 3)
        assert (chern_data(3, -1).c1, chern_data(3, -1).c2) == (-2, 4)
        assert (chern_data(2, 0).c1, chern_data(2, 0).c2) == (1, 1)

    def test_twist_recurrence(self):
        for d in range(1, 9):
            for k in range(-3, 4):
                assert chern_data(d, k + 1).c1 - chern_data(d, k).c1 == 2

    def test_normalized_first_chern(self):
        # At the normalizing twist floor((d-3)/2), c1 is 0 for odd d and -1
        # for even d.
        for d in range(2, 9):
            k = (d - 3) // 2
            c1 = chern_data(d, k).c1
            assert c1 in (0, -1)
            assert c1 == (0 if d % 2 == 1 else -1)

    def test_degree_validation(self):
        with pytest.raises(DegreeMismatchError):
            chern_data(0, 0)
