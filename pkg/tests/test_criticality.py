"""Zero localization, exact functional equation, the three-term difference
equation, and the continuous-Hahn bridge."""

from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legmellin.criticality import (
    HahnParams,
    critical_line_report,
    difference_equation_residual,
    difference_equation_symbolic,
    difference_equation_terms,
    find_roots,
    functional_equation_check,
    functional_equation_sign,
    hahn_constant,
    hahn_eval,
    hahn_eval_exact,
    hahn_proportionality,
)
from legmellin.errors import DomainError
from legmellin.mellin import poly_factor
from legmellin.mpcore import GaussianRational, HPComplex, RationalPolynomial


# ---------------------------------------------------------------------------
# root finding

def test_quadratic_roots_explicit():
    report = critical_line_report(4, 0, 256)
    assert len(report.roots) == 2
    lo, hi = sorted((r.to_mpc() for r in report.roots), key=lambda z: z.imag)
    with mp.workprec(320):
        imag = mp.sqrt(14) / 4
        half = mp.mpf(1) / 2
        assert abs(lo - (half - mp.mpc(0, 1) * imag)) < mp.mpf(2) ** -240
        assert abs(hi - (half + mp.mpc(0, 1) * imag)) < mp.mpf(2) ** -240


def test_single_root_is_exactly_half():
    report = critical_line_report(2, 0, 128)
    assert report.roots[0] == Fraction(1, 2)
    assert report.max_deviation == 0


def test_certificates_and_deviation():
    for n in (6, 11, 20):
        report = critical_line_report(n, 0, 256)
        assert report.max_deviation <= mp.mpf(10) ** -25
        assert report.shift_deviation <= report.certificate_tolerance
        assert all(r <= report.certificate_tolerance for r in report.residuals)


def test_higher_precision_tightens_roots():
    report = critical_line_report(24, 0, 512)
    assert report.max_deviation < mp.mpf(10) ** -60


def test_nonzero_order_zeros():
    report = critical_line_report(10, 4, 256)
    assert report.max_deviation <= mp.mpf(10) ** -25


def test_constant_factor_rejected():
    with pytest.raises(DomainError):
        critical_line_report(1, 0, 128)


def test_find_roots_on_plain_polynomial():
    # (s - 1/2)(s - 3/2) expanded
    p = RationalPolynomial([Fraction(3, 4), -2, 1])
    roots = sorted(find_roots(p, 192), key=lambda r: r.to_mpc().real)
    with mp.workprec(256):
        assert abs(roots[0].to_mpc() - mp.mpf(1) / 2) < mp.mpf(2) ** -180
        assert abs(roots[1].to_mpc() - mp.mpf(3) / 2) < mp.mpf(2) ** -180


# ---------------------------------------------------------------------------
# functional equation

def test_sign_depends_on_reduced_degree():
    assert functional_equation_sign(4, 0) == 1
    assert functional_equation_sign(2, 0) == -1
    assert functional_equation_sign(5, 0) == 1
    # m = 2 mod 4 flips relative to the n-only reading
    assert functional_equation_sign(4, 2) == -1
    assert functional_equation_sign(6, 2) == 1


def test_sign_domain():
    with pytest.raises(DomainError):
        functional_equation_sign(4, 1)
    with pytest.raises(DomainError):
        functional_equation_sign(2, 4)


@given(st.integers(min_value=0, max_value=120))
@settings(max_examples=40, deadline=None)
def test_reflection_identity_m0(n):
    assert functional_equation_check(n, 0)


@pytest.mark.parametrize("n,m", [(2, 2), (4, 2), (6, 2), (8, 4), (10, 6), (12, 12)])
def test_reflection_identity_even_m(n, m):
    assert functional_equation_check(n, m)


# ---------------------------------------------------------------------------
# difference equation

@pytest.mark.parametrize("s", [Fraction(5, 2), Fraction(3), HPComplex(3, 1, 256)])
@pytest.mark.parametrize("n,m", [(2, 0), (7, 0), (12, 2)])
def test_difference_equation_numeric(n, m, s):
    terms = difference_equation_terms(n, s, m, 256)
    residual = difference_equation_residual(n, s, m, 256)
    scale = max(max(t.abs_value() for t in terms), mp.mpf(1))
    with mp.workprec(320):
        assert residual.abs_value() / scale < mp.mpf(10) ** -20


def test_difference_equation_domain():
    with pytest.raises(DomainError):
        difference_equation_terms(4, Fraction(3, 2), 0, 128)


def test_difference_equation_symbolic_zero():
    for n in range(2, 31):
        assert difference_equation_symbolic(n, 0).is_zero
    assert difference_equation_symbolic(12, 2).is_zero


# ---------------------------------------------------------------------------
# continuous Hahn bridge

def test_hahn_exact_spread_is_zero():
    samples = [Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 3), Fraction(9, 4)]
    for n in range(1, 8):
        assert hahn_proportionality(n, samples, 256) == 0


def test_hahn_constant_powers_of_minus_four_i():
    want = GaussianRational(1)
    minus_four_i = GaussianRational(0, -4)
    for n in range(1, 8):
        want = want * minus_four_i
        assert hahn_constant(n) == want


def test_hahn_eval_exact_matches_float():
    params = HahnParams(Fraction(-3), Fraction(0), Fraction(1, 2), Fraction(1, 2) - 3)
    x = GaussianRational(0, Fraction(-5, 4))
    exact = hahn_eval_exact(3, x, params).to_hpcomplex(192)
    floated = hahn_eval(3, HPComplex.from_value(mp.mpc(0, -1.25), 192), params, 192)
    with mp.workprec(256):
        assert abs(exact.to_mpc() - floated.to_mpc()) < mp.mpf(2) ** -150


def test_hahn_domain_checks():
    with pytest.raises(DomainError):
        hahn_proportionality(0, [Fraction(2), Fraction(3)])
    with pytest.raises(DomainError):
        hahn_proportionality(2, [Fraction(2)])
