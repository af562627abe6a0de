"""Gamma/zeta wrappers, Ferrers evaluation, the hypergeometric engine, and
the 3F2(1) transformation catalog."""

from fractions import Fraction

import mpmath as mp
import pytest

from legmellin.errors import DivergenceError, DomainError, PoleError
from legmellin.mpcore import GaussianRational, HPComplex
from legmellin.specfun import (
    HypergeometricSpec,
    TransformId,
    ZetaKind,
    ZetaRequest,
    double_factorial,
    ferrers,
    gamma,
    hurwitz_zeta,
    hyp2f1,
    hyp3f2,
    hyp_pfq,
    hyp_terminating_exact,
    is_nonpositive_integer,
    kummer_2f1_residual,
    pochhammer_rational,
    polygamma,
    reciprocal_gamma,
    riemann_zeta,
    threeF2_transform_check,
    zeta_family,
)


def _small(value, prec, slack=16) -> bool:
    with mp.workprec(prec + 32):
        return abs(value.to_mpc() if isinstance(value, HPComplex) else value) \
            <= mp.mpf(2) ** (-(prec - slack))


# ---------------------------------------------------------------------------
# gamma / zeta family

def test_gamma_half_is_sqrt_pi():
    got = gamma(Fraction(1, 2), 256)
    with mp.workprec(300):
        assert abs(got.to_mpc() - mp.sqrt(mp.pi)) < mp.mpf(2) ** -240


def test_gamma_pole_raises():
    with pytest.raises(PoleError):
        gamma(0)
    with pytest.raises(PoleError):
        gamma(-3)


def test_reciprocal_gamma_is_zero_at_poles():
    assert reciprocal_gamma(-5, 128) == 0
    assert reciprocal_gamma(0, 128) == 0


def test_riemann_zeta_at_two():
    got = riemann_zeta(2, 256)
    with mp.workprec(300):
        assert abs(got.to_mpc() - mp.pi ** 2 / 6) < mp.mpf(2) ** -240


def test_zeta_pole_and_domain_errors():
    with pytest.raises(PoleError):
        riemann_zeta(1)
    with pytest.raises(PoleError):
        hurwitz_zeta(1, Fraction(1, 4))
    with pytest.raises(DomainError):
        hurwitz_zeta(2, -1)
    with pytest.raises(DomainError):
        zeta_family(ZetaRequest(ZetaKind.POLYGAMMA, Fraction(1, 2), 1))


def test_polygamma_one_at_one():
    got = polygamma(1, 1, 192)
    with mp.workprec(240):
        assert abs(got.to_mpc() - mp.pi ** 2 / 6) < mp.mpf(2) ** -180


def test_is_nonpositive_integer_readings():
    assert is_nonpositive_integer(0)
    assert is_nonpositive_integer(Fraction(-4))
    assert is_nonpositive_integer(GaussianRational(-2))
    assert not is_nonpositive_integer(Fraction(-1, 2))
    assert not is_nonpositive_integer(GaussianRational(-2, 1))
    assert not is_nonpositive_integer(3)


# ---------------------------------------------------------------------------
# Ferrers functions

def test_ferrers_legendre_cubic():
    # evaluates at the ambient working precision
    with mp.workprec(200):
        x = mp.mpf(3) / 10
        want = (5 * x ** 3 - 3 * x) / 2
        assert abs(ferrers(3, 0, x) - want) < mp.mpf(10) ** -40


def test_ferrers_condon_shortley_phase():
    # P_1^1 carries the (-1)^m phase, P_2^2 does not show it (m even)
    with mp.workprec(200):
        x = mp.mpf(1) / 2
        assert abs(ferrers(1, 1, x) + mp.sqrt(1 - x * x)) < mp.mpf(10) ** -40
        assert abs(ferrers(2, 2, x) - 3 * (1 - x * x)) < mp.mpf(10) ** -40


def test_ferrers_above_degree_vanishes():
    assert ferrers(1, 2, mp.mpf("0.7")) == 0


def test_ferrers_rejects_negative_orders():
    with pytest.raises(DomainError):
        ferrers(-1, 0, 0)
    with pytest.raises(DomainError):
        ferrers(2, -1, 0)


def test_double_factorial_conventions():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(7) == 105
    assert double_factorial(8) == 384
    with pytest.raises(DomainError):
        double_factorial(-2)


def test_pochhammer_rational():
    assert pochhammer_rational(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer_rational(Fraction(-2), 3) == 0
    assert pochhammer_rational(Fraction(5), 0) == 1


# ---------------------------------------------------------------------------
# hypergeometric engine

def test_terminating_series_exact_value():
    # 2F1(-3, 1/2; 2; 1/3) summed by hand with Fractions
    spec = HypergeometricSpec((-3, Fraction(1, 2)), (2,), Fraction(1, 3))
    want = Fraction(0)
    for k in range(4):
        term = (pochhammer_rational(Fraction(-3), k)
                * pochhammer_rational(Fraction(1, 2), k))
        term /= (pochhammer_rational(Fraction(2), k)
                 * Fraction(1) * pochhammer_rational(Fraction(1), k))
        want += term * Fraction(1, 3) ** k
    got = hyp_terminating_exact(spec)
    assert got == GaussianRational(want)


def test_terminating_path_matches_float_path():
    spec = HypergeometricSpec((-4, Fraction(3, 2), Fraction(1, 4)),
                              (Fraction(7, 3), 2), Fraction(1))
    exact = hyp_terminating_exact(spec).to_hpcomplex(256)
    floated = hyp_pfq(spec, 256)
    assert _small(exact.to_mpc() - floated.to_mpc(), 256)


def test_disk_series_matches_mpmath():
    spec = HypergeometricSpec((Fraction(1, 3), Fraction(1, 5)),
                              (Fraction(9, 7),), Fraction(2, 5))
    got = hyp_pfq(spec, 192)
    with mp.workprec(260):
        want = mp.hyper([mp.mpf(1) / 3, mp.mpf(1) / 5], [mp.mpf(9) / 7],
                        mp.mpf(2) / 5)
        assert abs(got.to_mpc() - want) < mp.mpf(2) ** -176


def test_gauss_value_at_unit_argument():
    a, b, c = Fraction(1, 3), Fraction(1, 4), Fraction(2)
    got = hyp2f1(a, b, c, 1, 192)
    with mp.workprec(260):
        want = (mp.gamma(2) * mp.gamma(2 - mp.mpf(7) / 12)
                / (mp.gamma(2 - mp.mpf(1) / 3) * mp.gamma(2 - mp.mpf(1) / 4)))
        assert abs(got.to_mpc() - want) < mp.mpf(2) ** -176


def test_divergent_unit_series_refused():
    # excess d+e-a-b-c = 0
    with pytest.raises(DivergenceError):
        hyp3f2(1, 1, 1, Fraction(3, 2), Fraction(3, 2), 1)


def test_pfaff_reflection_crosscheck():
    # 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) on the real slit
    a, b, c = Fraction(1, 3), Fraction(2, 5), Fraction(5, 4)
    z = Fraction(-2, 3)
    lhs = hyp2f1(a, b, c, z, 192).to_mpc()
    with mp.workprec(260):
        rhs = (1 - mp.mpf(z.numerator) / z.denominator) ** (-mp.mpf(1) / 3)
        rhs *= hyp2f1(a, c - b, c, Fraction(2, 5), 192).to_mpc()
        assert abs(lhs - rhs) < mp.mpf(2) ** -176


# ---------------------------------------------------------------------------
# Kummer family at argument -1

@pytest.mark.parametrize("which", ["a", "b", "c"])
@pytest.mark.parametrize("s", [Fraction(1, 2), Fraction(2), Fraction(7, 2)])
def test_kummer_residuals_vanish(which, s):
    res = kummer_2f1_residual(which, s, 256)
    assert _small(res, 256)


def test_kummer_rejects_unknown_tag():
    with pytest.raises(DomainError):
        kummer_2f1_residual("d", Fraction(2))


# ---------------------------------------------------------------------------
# 3F2(1) transformation catalog

TERMINATING_TUPLES = {
    TransformId.A1: (Fraction(-3), Fraction(1, 2), Fraction(5, 4),
                     Fraction(7, 8), Fraction(13, 8)),
    TransformId.A2: (Fraction(-2), Fraction(2, 3), Fraction(5, 4),
                     Fraction(3, 4), Fraction(7, 6)),
    TransformId.A3: (Fraction(-4), Fraction(1, 3), Fraction(3, 2),
                     Fraction(4, 5), Fraction(9, 10)),
}


@pytest.mark.parametrize("transform", list(TransformId))
def test_catalog_terminating_tuples(transform):
    a, b, c, d, e = TERMINATING_TUPLES[transform]
    res = threeF2_transform_check(transform, a, b, c, d, e, 256)
    assert _small(res, 256, slack=40)


def test_catalog_a1_generic_nonterminating():
    # both right-hand terms active; pins the sign between them
    res = threeF2_transform_check(
        TransformId.A1, Fraction(1, 3), Fraction(1, 4), Fraction(5, 4),
        Fraction(7, 8), Fraction(3, 2), 128)
    assert _small(res, 128, slack=24)


@pytest.mark.parametrize("transform", [TransformId.A2, TransformId.A3])
def test_catalog_a2_a3_generic_nonterminating(transform):
    res = threeF2_transform_check(
        transform, Fraction(1, 3), Fraction(1, 2), Fraction(2, 3),
        Fraction(3, 4), Fraction(27, 20), 96)
    assert _small(res, 96, slack=24)
