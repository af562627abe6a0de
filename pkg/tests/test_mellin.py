"""Closed forms, polynomial factors, representation catalog, generating
series."""

from fractions import Fraction

import mpmath as mp
import pytest

from legmellin.errors import DomainError
from legmellin.mpcore import HPComplex, RationalPolynomial
from legmellin.mellin import (
    RepVariant,
    genfun,
    mellin_closed,
    mellin_odd_order_exact,
    mellin_quadrature,
    mellin_recursion_reference,
    mellin_rep,
    order_one_exact,
    order_one_rationality_check,
    order_one_reference,
    poly_factor,
    special_value_at_1,
    special_value_at_1_rational,
    variant_is_quadrature,
)

S_POINTS = (Fraction(3, 4), Fraction(3, 2), Fraction(5, 2))


def _close(a: HPComplex, b, prec: int, slack: int = 20) -> bool:
    with mp.workprec(prec + 64):
        return abs(a.to_mpc() - (b.to_mpc() if isinstance(b, HPComplex) else b)) \
            < mp.mpf(2) ** (-(prec - slack))


# ---------------------------------------------------------------------------
# polynomial factors

FROZEN_POLYS = {
    (0, 0): (Fraction(1),),
    (1, 0): (Fraction(1),),
    (2, 0): (Fraction(-1), Fraction(2)),
    (3, 0): (Fraction(-1), Fraction(2)),
    (4, 0): (Fraction(9, 2), Fraction(-4), Fraction(4)),
    (5, 0): (Fraction(29, 2), Fraction(-4), Fraction(4)),
    (4, 2): (Fraction(-45), Fraction(90)),
}


@pytest.mark.parametrize("key", sorted(FROZEN_POLYS))
def test_frozen_polynomial_factors(key):
    n, m = key
    assert poly_factor(n, m).poly.coefficients == FROZEN_POLYS[key]


def test_poly_leading_coefficient_and_degree():
    for n in range(201):
        p = poly_factor(n, 0).poly
        assert p.degree == n // 2
        assert p.leading_coefficient == 2 ** (n // 2)


def test_poly_factor_rejects_bad_orders():
    with pytest.raises(DomainError):
        poly_factor(-1, 0)
    with pytest.raises(DomainError):
        poly_factor(3, -2)


# ---------------------------------------------------------------------------
# closed-form anchors (classical Beta-integral values)

ANCHORS = [
    (0, 0, Fraction(1), lambda: mp.pi / 2),
    (1, 0, Fraction(1), lambda: mp.mpf(1)),
    (2, 0, Fraction(1), lambda: mp.pi / 8),
    (4, 0, Fraction(1), lambda: 9 * mp.pi / 128),
    (2, 0, Fraction(3), lambda: 5 * mp.pi / 32),
    (4, 0, Fraction(3), lambda: 19 * mp.pi / 256),
    (4, 2, Fraction(1), lambda: 45 * mp.pi / 32),
]


@pytest.mark.parametrize("n,m,s,want", ANCHORS)
def test_closed_form_anchors(n, m, s, want):
    got = mellin_closed(n, m, s, 256)
    with mp.workprec(320):
        assert abs(got.to_mpc() - want()) < mp.mpf(2) ** -240


def test_degree_one_is_shifted_degree_zero():
    # P_1(x) = x, so M_1(s) = M_0(s+1)
    for s in S_POINTS:
        assert _close(mellin_closed(1, 0, s, 256),
                      mellin_closed(0, 0, s + 1, 256), 256)


def test_order_above_degree_vanishes():
    assert mellin_closed(5, 7, Fraction(1), 128) == 0


def test_left_half_plane_refused():
    with pytest.raises(DomainError):
        mellin_closed(2, 0, Fraction(-1, 2), 128)
    with pytest.raises(DomainError):
        mellin_closed(2, 0, 0, 128)


def test_odd_order_rational_value():
    # M_1^1(s) = -1/s exactly
    assert mellin_odd_order_exact(1, 1, Fraction(3, 2)) == Fraction(-2, 3)
    assert mellin_odd_order_exact(1, 1, Fraction(5)) == Fraction(-1, 5)
    assert mellin_odd_order_exact(3, 5, Fraction(2)) == 0
    with pytest.raises(DomainError):
        mellin_odd_order_exact(2, 2, Fraction(2))


def test_odd_order_closed_matches_exact():
    for n, m in ((1, 1), (3, 1), (5, 3), (6, 3)):
        exact = mellin_odd_order_exact(n, m, Fraction(7, 3))
        got = mellin_closed(n, m, Fraction(7, 3), 192)
        with mp.workprec(256):
            want = mp.mpf(exact.numerator) / exact.denominator
            assert abs(got.to_mpc() - want) < mp.mpf(2) ** -170


def test_special_value_formula_even_n():
    assert special_value_at_1_rational(0) == Fraction(1, 2)
    assert special_value_at_1_rational(2) == Fraction(1, 8)
    assert special_value_at_1_rational(4) == Fraction(9, 128)
    for n in (0, 2, 4, 6, 8):
        assert _close(special_value_at_1(n, 256),
                      mellin_closed(n, 0, Fraction(1), 256), 256)


def test_special_value_refuses_odd_n():
    with pytest.raises(DomainError):
        special_value_at_1(3)
    with pytest.raises(DomainError):
        special_value_at_1_rational(1)


# ---------------------------------------------------------------------------
# independent value recursion

@pytest.mark.parametrize("n,m", [(7, 0), (10, 4), (12, 2), (9, 9), (11, 3)])
@pytest.mark.parametrize("s", [Fraction(5, 2), HPComplex(2, 3, 320)])
def test_value_recursion_matches_closed_form(n, m, s):
    ref = mellin_recursion_reference(n, m, s, 320)
    got = mellin_closed(n, m, s, 256)
    with mp.workprec(384):
        rel = abs(got.to_mpc() - ref.to_mpc()) / max(abs(ref.to_mpc()), mp.mpf(1))
        assert rel < mp.mpf(10) ** -60


# ---------------------------------------------------------------------------
# quadrature route

def test_quadrature_matches_closed_form():
    res = mellin_quadrature(2, 0, Fraction(1), 128, tolerance=mp.mpf(10) ** -30,
                            min_level=10)
    assert res.levels_used >= 10
    with mp.workprec(200):
        assert abs(res.value.to_mpc() - mp.pi / 8) < mp.mpf(10) ** -28


def test_quadrature_handles_order():
    res = mellin_quadrature(4, 2, Fraction(1), 110)
    with mp.workprec(160):
        assert abs(res.value.to_mpc() - 45 * mp.pi / 32) < mp.mpf(10) ** -15


# ---------------------------------------------------------------------------
# representation catalog

def test_analytic_variants_close_over_parities():
    checked = set()
    for variant in RepVariant:
        if variant in (RepVariant.GENFUN, RepVariant.L2E):
            continue
        if variant_is_quadrature(variant):
            continue
        for n in (5, 6):
            try:
                got = mellin_rep(variant, n, 0, Fraction(3, 2), 256)
            except DomainError:
                continue
            want = mellin_closed(n, 0, Fraction(3, 2), 256)
            assert _close(got, want, 256, slack=90), (variant, n)
            checked.add(variant)
    assert checked >= {RepVariant.L2A, RepVariant.L2B, RepVariant.L2C,
                       RepVariant.L2D, RepVariant.L3A, RepVariant.L3B,
                       RepVariant.L3C, RepVariant.P3, RepVariant.L8}


def test_l8_supports_nonzero_order():
    got = mellin_rep(RepVariant.L8, 6, 2, Fraction(5, 2), 256)
    want = mellin_closed(6, 2, Fraction(5, 2), 256)
    assert _close(got, want, 256, slack=90)


def test_quadrature_variants_close():
    for variant in (RepVariant.P1, RepVariant.COS_QUAD, RepVariant.TANH_QUAD):
        got = mellin_rep(variant, 3, 0, Fraction(3, 2), 110)
        want = mellin_closed(3, 0, Fraction(3, 2), 110)
        with mp.workprec(160):
            assert abs(got.to_mpc() - want.to_mpc()) < mp.mpf(10) ** -15, variant


def test_defective_variant_pinned():
    # the (e)-style expansion is wrong for even n >= 2: finite but off
    got = mellin_rep(RepVariant.L2E, 2, 0, Fraction(3), 256)
    with mp.workprec(320):
        assert abs(got.to_mpc() - (-21 * mp.pi / 256)) < mp.mpf(2) ** -200
        assert abs(got.to_mpc() - 5 * mp.pi / 32) > mp.mpf(1) / 2


def test_defective_variant_agrees_at_n_zero():
    got = mellin_rep(RepVariant.L2E, 0, 0, Fraction(3, 2), 256)
    want = mellin_closed(0, 0, Fraction(3, 2), 256)
    assert _close(got, want, 256, slack=90)


def test_defective_variant_refuses_odd_n():
    with pytest.raises(DomainError):
        mellin_rep(RepVariant.L2E, 3, 0, Fraction(3, 2), 128)


def test_genfun_variant_is_a_refusal():
    with pytest.raises(DomainError):
        mellin_rep(RepVariant.GENFUN, 2, 0, Fraction(3, 2), 128)


def test_rep_results_keep_full_width():
    # regression: the final wrap once rounded at the ambient 53-bit context
    got = mellin_rep(RepVariant.L2A, 7, 0, Fraction(3, 2), 256)
    want = mellin_closed(7, 0, Fraction(3, 2), 256)
    with mp.workprec(320):
        assert abs(got.to_mpc() - want.to_mpc()) < mp.mpf(10) ** -25


# ---------------------------------------------------------------------------
# generating series

def test_genfun_partial_vs_closed():
    cmp_ = genfun(Fraction(1, 10), Fraction(2), 60, 256)
    diff = (cmp_.partial_sum - cmp_.closed_form).abs_value()
    assert diff <= cmp_.tail_bound
    assert diff < mp.mpf(10) ** -25


def test_genfun_parity_split():
    cmp_ = genfun(Fraction(1, 10), Fraction(2), 60, 256)
    even_diff = (cmp_.partial_even - cmp_.closed_even).abs_value()
    odd_diff = (cmp_.partial_odd - cmp_.closed_odd).abs_value()
    assert even_diff < mp.mpf(10) ** -25
    assert odd_diff < mp.mpf(10) ** -25
    total = cmp_.closed_even + cmp_.closed_odd - cmp_.closed_form
    assert total.abs_value() < mp.mpf(10) ** -60


def test_genfun_domain_checks():
    with pytest.raises(DomainError):
        genfun(Fraction(3, 2), Fraction(2), 10, 128)
    with pytest.raises(DomainError):
        genfun(Fraction(1, 10), Fraction(2), -1, 128)


# ---------------------------------------------------------------------------
# order-one rational structure

def test_order_one_rationality():
    for n in range(1, 21):
        assert order_one_rationality_check(n)


def test_order_one_exact_matches_reference():
    for n in (1, 2, 5, 8):
        exact = order_one_exact(n, Fraction(7, 4))
        ref = order_one_reference(n, Fraction(7, 4), 192)
        with mp.workprec(256):
            want = mp.mpf(exact.numerator) / exact.denominator
            assert abs(ref.to_mpc() - want) < mp.mpf(2) ** -170
