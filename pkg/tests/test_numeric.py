import cmath
import math

import pytest
from hypothesis import given, settings

from polyharm.bipoly import BiPoly, GaussianRational, eval_exact
from polyharm.gen import gen_bipoly, spawn
from polyharm.numeric import (
    eval_float,
    exp_identity_check,
    exp_within_tolerance,
    fd_laplacian,
    fd_within_tolerance,
    sample_points,
)
from polyharm.wirtinger import laplacian
from strategies import bipoly_any, scalars

Z = BiPoly.z()
ZBAR = BiPoly.zbar()


def test_eval_float_modulus():
    assert eval_float(Z * ZBAR, 3 + 4j) == pytest.approx(25.0)


def test_eval_float_square():
    assert eval_float(Z**2, 1 + 1j) == pytest.approx(2j, abs=1e-12)


def test_eval_float_matches_exact():
    f = Z**2 * ZBAR**3 + Z
    exact = complex(eval_exact(f, GaussianRational(1, 1)))
    assert abs(eval_float(f, 1 + 1j) - exact) <= 1e-12 * abs(exact)


def _term_scale(f, p):
    # conditioning of the evaluation: cancellation can make |f(p)| tiny
    # while the summed terms are large, so the float bound is relative to
    # the term magnitudes, not the result
    return sum(
        abs(complex(c)) * abs(p) ** (i + j) for (i, j), c in f.terms.items()
    )


@given(bipoly_any, scalars)
@settings(max_examples=40)
def test_eval_float_tracks_eval_exact(f, p):
    exact = complex(eval_exact(f, p))
    approx = eval_float(f, complex(p))
    tolerance = max(1e-10 * max(1.0, abs(exact)), 1e-12 * _term_scale(f, complex(p)))
    assert abs(approx - exact) <= tolerance


def test_eval_float_tracks_eval_exact_at_full_coefficient_range():
    from polyharm.gen import SplitMix64, spawn

    for index in range(50):
        rng = SplitMix64(spawn(43, index))
        f = gen_bipoly(rng.next_u64(), 6)
        p = GaussianRational(rng.fraction(), rng.fraction())
        exact = complex(eval_exact(f, p))
        approx = eval_float(f, complex(p))
        tolerance = max(1e-10 * max(1.0, abs(exact)), 1e-12 * _term_scale(f, complex(p)))
        assert abs(approx - exact) <= tolerance


def test_fd_laplacian_quadratic_is_nearly_exact():
    report = fd_laplacian(Z * ZBAR, 0.3 - 0.1j, 1e-4)
    assert report.symbolic_value == pytest.approx(4.0)
    assert report.abs_error <= 1e-6


def test_fd_laplacian_matches_symbolic_derivative():
    f = Z**2 * ZBAR**3
    point = 0.3 + 0.2j
    report = fd_laplacian(f, point, 1e-4)
    expected = eval_float(Z * ZBAR**2 * 24, point)
    assert report.symbolic_value == pytest.approx(expected)
    assert report.abs_error <= 1e-5


def test_fd_laplacian_on_harmonic_is_tiny():
    report = fd_laplacian(Z**5, 0.4 + 0.25j, 1e-4)
    assert report.symbolic_value == 0
    assert abs(report.fd_value) <= 1e-5


def test_fd_reports_are_consistent():
    report = fd_laplacian(Z * ZBAR**2, 0.2 + 0.2j)
    assert report.abs_error == abs(report.symbolic_value - report.fd_value)
    assert report.h == 1e-4


def test_fd_seeded_sample():
    for index in range(30):
        f = gen_bipoly(spawn(31, index), 6)
        for point in sample_points(spawn(37, index), 3):
            report = fd_laplacian(f, point, 1e-4)
            assert fd_within_tolerance(report), (f, point, report.abs_error)


def test_stencil_second_order_convergence():
    # truncation-dominated regime: the error ratio under h -> h/2 sits near 4
    f = Z**3 * ZBAR**3
    point = 0.4 + 0.3j
    coarse = fd_laplacian(f, point, 2e-2)
    fine = fd_laplacian(f, point, 1e-2)
    assert coarse.abs_error > 0 and fine.abs_error > 0
    ratio = coarse.abs_error / fine.abs_error
    assert 3.0 <= ratio <= 5.0


def test_fd_validation():
    with pytest.raises(ValueError):
        fd_laplacian(Z, 0j, 0.0)


def test_exp_identity_analytic_input_vanishes():
    report = exp_identity_check(Z, 1, 0.2 + 0.1j, 1e-3)
    assert report.symbolic_value == 0
    assert exp_within_tolerance(report, Z, 1)


def test_exp_identity_hand_value():
    # at |z|^2 = 1/4 the obstruction 2 + 4|z|^2 + |z|^4 evaluates to 49/16
    f = Z * ZBAR
    point = 0.5 + 0.0j
    report = exp_identity_check(f, 1, point, 1e-3)
    expected = 16.0 * math.exp(0.25) * (49.0 / 16.0)
    assert report.symbolic_value == pytest.approx(expected)
    assert report.abs_error <= 1e-2 * abs(report.symbolic_value)


def test_exp_identity_m_two_consistent():
    f = Z * ZBAR
    point = 0.4 + 0.1j
    report = exp_identity_check(f, 2, point, 1e-3)
    assert exp_within_tolerance(report, f, 2)


def test_exp_identity_holds_across_biharmonic_shapes():
    f = Z**2 * ZBAR + Z * ZBAR**2 - ZBAR
    report = exp_identity_check(f, 1, 0.3 - 0.2j, 1e-3)
    assert exp_within_tolerance(report, f, 1)


def test_exp_identity_discrepancy_outside_biharmonic_domain():
    # For f of order 3 the identity picks up an extra 16*m*exp(m*f) times
    # the fourth mixed derivative of f; pin that the finite difference
    # converges to exactly that offset so the domain restriction stays
    # documented by a test.
    f = BiPoly.monomial(2, 2)
    m = 1
    point = 0.2 + 0.1j
    report = exp_identity_check(f, m, point, 1e-3)
    fourth_mixed = eval_float(laplacian(f, 2), point) / 16.0
    offset = 16.0 * m * cmath.exp(m * eval_float(f, point)) * fourth_mixed
    assert abs(report.fd_value - (report.symbolic_value + offset)) <= 1e-2 * abs(offset)


def test_exp_identity_validation():
    with pytest.raises(ValueError):
        exp_identity_check(Z, 0, 0j)
    with pytest.raises(ValueError):
        exp_identity_check(Z, 4, 0j)
    with pytest.raises(ValueError):
        exp_identity_check(Z, 1, 0j, -1.0)


def test_sample_points_deterministic_and_in_disk():
    points = sample_points(5, 20)
    assert points == sample_points(5, 20)
    assert all(abs(p) < 1.0 for p in points)
