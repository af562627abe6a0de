"""Fractional-part transforms: zeta combinations, boundary limits, the
paired integral, and the alternating/direct series transforms."""

from fractions import Fraction

import mpmath as mp
import pytest

from legmellin.errors import DomainError, PoleError
from legmellin.fracpart import (
    FracIntegralSpec,
    SublemmaState,
    TransformKind,
    alpha_one_limit,
    fermi_bose_transform,
    frac_basic,
    frac_general,
    frac_int_moments,
    frac_pair_integral,
    frac_weight_quadrature,
    moment_boundary_value,
    moment_combination,
    numeric_fracpart_oracle,
    pair_integral_report,
    richardson_extrapolate,
    sublemma_sum,
    sublemma_sum_series,
)
from legmellin.mpcore import HPComplex, RationalPolynomial


def _near(value: HPComplex, want, prec, slack=40) -> bool:
    with mp.workprec(prec + 64):
        return abs(value.to_mpc() - want) < mp.mpf(2) ** (-(prec - slack))


# ---------------------------------------------------------------------------
# plain transform

def test_basic_transform_value():
    got = frac_basic(Fraction(2), 256)
    with mp.workprec(320):
        assert _near(got, 1 - mp.zeta(2) / 2, 256)


def test_basic_transform_domain():
    with pytest.raises(DomainError):
        frac_basic(Fraction(1))
    with pytest.raises(DomainError):
        frac_basic(Fraction(1, 2))


# ---------------------------------------------------------------------------
# moment combinations

def test_first_moment_map_is_frozen():
    combo = moment_combination(1, 1)
    assert combo.coefficient(0) == RationalPolynomial([-1, 1])      # (s-1) zeta(s)
    assert combo.coefficient(1) == RationalPolynomial([2, -1])      # (2-s) zeta(s-1)
    assert combo.denominator == RationalPolynomial([0, -1, 1])      # s(s-1)
    assert combo.rational_numerator.is_zero


def test_second_moment_map_is_frozen():
    combo = moment_combination(1, 2)
    assert combo.coefficient(2) == RationalPolynomial([3, -1])
    assert combo.coefficient(1) == RationalPolynomial([-3, 2])
    assert combo.coefficient(0) == RationalPolynomial([1, -1])
    assert combo.denominator == RationalPolynomial([0, -1, 1])


def test_moment_combination_domain():
    with pytest.raises(DomainError):
        moment_combination(3, 1)
    with pytest.raises(DomainError):
        moment_combination(2, 0)


def test_pinned_boundary_value_at_two():
    # first mixed moment at its zeta(1) boundary
    got = frac_int_moments(FracIntegralSpec(1, 1, Fraction(2)), 256)
    with mp.workprec(320):
        assert _near(got, (mp.zeta(2) - 1) / 2, 256)


def test_zeta_pole_rule_applies_only_when_coefficient_vanishes():
    combo = moment_combination(1, 2)
    with pytest.raises(PoleError):
        combo.evaluate(Fraction(2), 128)  # zeta(s-1) coefficient (-3+2s) != 0


def test_moments_match_oracle():
    for alpha, beta, s in ((1, 1, Fraction(3)), (2, 1, Fraction(4)),
                           (1, 2, Fraction(7, 2))):
        spec = FracIntegralSpec(alpha, beta, s)
        got = frac_int_moments(spec, 192)
        oracle = numeric_fracpart_oracle(spec, precision_bits=192)
        with mp.workprec(256):
            diff = abs(got.to_mpc() - oracle.value.to_mpc())
            assert diff <= max(8 * oracle.error_bound, mp.mpf(10) ** -40)


def test_oracle_sandwich_brackets_value():
    spec = FracIntegralSpec(1, 1, Fraction(3))
    oracle = numeric_fracpart_oracle(spec, precision_bits=128)
    closed = frac_int_moments(spec, 128)
    assert oracle.lower is not None and oracle.upper is not None
    assert oracle.lower <= closed.to_mpc().real <= oracle.upper


def test_boundary_formula_matches_pole_rule():
    for alpha in (1, 2):
        for n in range(1, 7):
            via_formula = moment_boundary_value(alpha, n, 192)
            via_rule = frac_int_moments(
                FracIntegralSpec(alpha, n, Fraction(n + alpha)), 192)
            assert _near(via_formula, via_rule.to_mpc(), 192, slack=30)


def test_boundary_matches_richardson_limit():
    n, alpha = 2, 1
    s0 = Fraction(n + alpha)
    samples = [
        frac_int_moments(FracIntegralSpec(alpha, n, s0 + Fraction(1, 2 ** k)), 160)
        for k in range(4, 16)
    ]
    limit = richardson_extrapolate(samples, 160)
    boundary = moment_boundary_value(alpha, n, 160)
    with mp.workprec(200):
        assert abs(limit - boundary.to_mpc()) < mp.mpf(10) ** -25


def test_richardson_on_synthetic_expansion():
    with mp.workprec(200):
        samples = [mp.pi + 3 * mp.mpf(2) ** -k + mp.mpf(2) ** (-2 * k)
                   for k in range(12)]
    got = richardson_extrapolate(samples, 160)
    with mp.workprec(200):
        assert abs(got - mp.pi) < mp.mpf(10) ** -30


def test_spec_validation():
    with pytest.raises(DomainError):
        FracIntegralSpec(1, -1, Fraction(3))
    with pytest.raises(DomainError):
        FracIntegralSpec(1, 2, Fraction(3, 2))  # Re s <= beta
    with pytest.raises(DomainError):
        FracIntegralSpec(1, 1, Fraction(2), b=0)
    with pytest.raises(DomainError):
        FracIntegralSpec(1, 1, Fraction(2), alpha_denom=1)


# ---------------------------------------------------------------------------
# weighted transform and its endpoint limit

def test_weight_zero_collapses_to_basic():
    a = frac_general(Fraction(5, 2), 1, 0, 192)
    b = frac_basic(Fraction(5, 2), 192)
    assert a == b


def test_weighted_transform_against_quadrature():
    got = frac_general(Fraction(3), Fraction(2), Fraction(1, 4), 96)
    quad = frac_weight_quadrature(Fraction(3), Fraction(2), Fraction(1, 4), 96)
    with mp.workprec(160):
        diff = abs(got.to_mpc() - quad.value.to_mpc())
        assert diff <= max(8 * quad.error_bound, mp.mpf(10) ** -15)


def test_alpha_to_one_limit_is_euler_gamma():
    got = alpha_one_limit(Fraction(2), 1, 256)
    with mp.workprec(320):
        assert _near(got, mp.euler, 256)


# ---------------------------------------------------------------------------
# sublemma sums

def test_sublemma_series_matches_closed():
    state = SublemmaState(3, Fraction(1, 2))
    closed = sublemma_sum(state, 192)
    series = sublemma_sum_series(state, 192)
    with mp.workprec(256):
        assert abs(closed.to_mpc() - series.to_mpc()) < mp.mpf(2) ** -150


def test_sublemma_order_recurrence():
    # S_n(u) = S_{n-1}(u) - zeta(n+1, u+2)
    u = Fraction(1, 3)
    for n in range(2, 6):
        lhs = sublemma_sum(SublemmaState(n, u), 192)
        rhs = sublemma_sum(SublemmaState(n - 1, u), 192)
        with mp.workprec(256):
            step = mp.zeta(n + 1, mp.mpf(u.numerator) / u.denominator + 2)
            assert abs(lhs.to_mpc() - (rhs.to_mpc() - step)) < mp.mpf(2) ** -160


def test_sublemma_state_validation():
    with pytest.raises(DomainError):
        SublemmaState(0, Fraction(1, 2))
    with pytest.raises(DomainError):
        SublemmaState(2, Fraction(-2))


# ---------------------------------------------------------------------------
# paired integral

def test_pair_integral_closed_values():
    got1 = frac_pair_integral(1, 256)
    got2 = frac_pair_integral(2, 256)
    with mp.workprec(320):
        assert _near(got1, 2 * mp.euler - 1, 256)
        assert _near(got2, mp.euler - mp.mpf(1) / 2, 256)


def test_pair_integral_report_consistency():
    for s in (1, 2, 3):
        report = pair_integral_report(s, 96)
        assert report.difference <= max(8 * report.quadrature_error_bound,
                                        mp.mpf(10) ** -12)


# ---------------------------------------------------------------------------
# alternating / direct transforms

@pytest.mark.parametrize("s", [Fraction(3, 2), Fraction(2), Fraction(13, 4)])
@pytest.mark.parametrize("j", [2, 3])
def test_fermi_closed_vs_series(j, s):
    result = fermi_bose_transform(j, TransformKind.FERMI, s, 256)
    assert result.difference < mp.mpf(10) ** -20


def test_bose_j1_is_two_zeta_three():
    result = fermi_bose_transform(1, TransformKind.BOSE, Fraction(2), 256)
    assert result.difference < mp.mpf(10) ** -25
    with mp.workprec(320):
        assert _near(result.closed_value, 2 * mp.zeta(3), 256)


def test_bose_fractional_s():
    result = fermi_bose_transform(2, TransformKind.BOSE, Fraction(5, 2), 256)
    assert result.difference < mp.mpf(10) ** -20


def test_fermi_complex_argument():
    result = fermi_bose_transform(2, TransformKind.FERMI, HPComplex(2, 1, 128), 128)
    assert result.difference < mp.mpf(10) ** -30


def test_transform_domains():
    with pytest.raises(DomainError):
        fermi_bose_transform(3, TransformKind.FERMI, Fraction(1, 2), 128)
    with pytest.raises(DomainError):
        fermi_bose_transform(2, TransformKind.BOSE, Fraction(1, 2), 128)
    with pytest.raises(DomainError):
        fermi_bose_transform(0, TransformKind.FERMI, Fraction(2), 128)
    with pytest.raises(DomainError):
        fermi_bose_transform(2, "fermi", Fraction(2), 128)
