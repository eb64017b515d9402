from fractions import Fraction

import numpy as np
import pytest

from logcubic.cubics import hesse_cubic, hessian_curve
from logcubic.errors import (
    InsufficientSamplesError,
    NumericRankError,
    SingularCurveError,
    ZeroInputError,
)
from logcubic.forms import parse_form
from logcubic.involution import (
    InvolutionReport,
    check_involution,
    chordal_distance,
    involution_s,
    sample_hessian_points,
)


class TestChordalDistance:
    def test_identical_up_to_scale_and_phase(self):
        p = np.array([1 + 2j, -3, 0.5j])
        assert chordal_distance(p, p * (2 - 1j)) < 1e-15

    def test_orthogonal_points(self):
        assert chordal_distance(np.array([1, 0, 0]), np.array([0, 1, 0])) == pytest.approx(1.0)

    def test_small_angles_resolved(self):
        # Perturbations around 1e-12 must not drown in the eps floor of the
        # naive 1 - |<p,q>|^2 formula.
        p = np.array([1.0, 0.0, 0.0])
        q = np.array([1.0, 1e-12, 0.0])
        assert chordal_distance(p, q) == pytest.approx(1e-12, rel=1e-3)


class TestSampling:
    def test_residuals_below_bound(self):
        f = hesse_cubic(2)
        he = hessian_curve(f)
        scale = float(max(abs(c) for c in he.terms.values()))
        points = sample_hessian_points(f, 10, seed=1)
        assert len(points) == 30
        for q in points:
            residual = abs(complex(he.evaluate(tuple(complex(x) for x in q)))) / scale
            assert residual < 1e-10

    def test_fermat_lines_have_zero_coordinate(self):
        # The Hessian of the Fermat cubic is z0*z1*z2 = 0, so every sampled
        # point sits on a coordinate line.
        points = sample_hessian_points(hesse_cubic(0), 5, seed=2)
        assert points
        for q in points:
            assert min(abs(x) for x in q) < 1e-8

    def test_degenerate_hessian_rejected(self):
        with pytest.raises(SingularCurveError):
            sample_hessian_points(parse_form("z0^3"), 5, seed=0)

    def test_seed_determinism(self):
        a = sample_hessian_points(hesse_cubic(2), 8, seed=9)
        b = sample_hessian_points(hesse_cubic(2), 8, seed=9)
        assert len(a) == len(b)
        assert all(np.array_equal(x, y) for x, y in zip(a, b))


class TestInvolutionStep:
    def test_hand_example(self):
        # Fermat cubic at [0:1:-1]: polar conic 3 z1^2 - 3 z2^2 with Gram
        # diag(0, 3, -3); singular point [1:0:0].
        q = np.array([0, 1, -1], dtype=complex)
        s = involution_s(hesse_cubic(0), q / np.linalg.norm(q))
        assert chordal_distance(s, np.array([1, 0, 0])) < 1e-12

    def test_rank_one_rejected(self):
        # [1:0:0] on the Fermat Hessian: polar 3 z0^2 has Gram rank 1.
        with pytest.raises(NumericRankError):
            involution_s(hesse_cubic(0), np.array([1, 0, 0], dtype=complex))

    def test_off_curve_rejected(self):
        # A generic point off the Hessian curve has a full-rank polar Gram.
        q = np.array([1, 1, 1], dtype=complex) / np.sqrt(3)
        with pytest.raises(NumericRankError):
            involution_s(hesse_cubic(2), q)

    def test_double_application_returns(self):
        f = hesse_cubic(2)
        for q in sample_hessian_points(f, 10, seed=3):
            sq = involution_s(f, q)
            ssq = involution_s(f, sq)
            assert chordal_distance(ssq, q) < 1e-10
            assert chordal_distance(sq, q) > 1e-2


class TestCheckInvolution:
    @pytest.mark.parametrize("t", [Fraction(2), Fraction(1, 2), Fraction(-3)])
    def test_passes_on_smooth_hessians(self, t):
        report = check_involution(hesse_cubic(t), 100, 1e-8, seed=7)
        assert report.samples >= 50
        assert report.passed
        assert report.max_double_apply_error < 1e-8
        assert report.min_fixed_point_distance > 1e-8

    def test_fermat_filters_everything(self):
        # The Fermat Hessian is three lines; the involution image is always
        # a coordinate point with a rank-1 polar, so every sample is
        # filtered at the second application and the run reports the
        # shortfall instead of passing hollowly.
        with pytest.raises(InsufficientSamplesError):
            check_involution(hesse_cubic(0), 100, 1e-8, seed=3)

    def test_zero_tolerance_rejected(self):
        with pytest.raises(ZeroInputError):
            check_involution(hesse_cubic(2), 10, 0.0, seed=0)

    def test_report_determinism(self):
        a = check_involution(hesse_cubic(2), 30, 1e-8, seed=11)
        b = check_involution(hesse_cubic(2), 30, 1e-8, seed=11)
        assert a == b

    def test_pass_semantics(self):
        report = InvolutionReport(
            samples=60,
            max_double_apply_error=1e-12,
            min_fixed_point_distance=0.5,
            tolerance=1e-8,
        )
        assert report.passed
        failing = InvolutionReport(60, 1e-6, 0.5, 1e-8)
        assert not failing.passed
        fixed_point = InvolutionReport(60, 1e-12, 1e-12, 1e-8)
        assert not fixed_point.passed
