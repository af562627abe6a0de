"""Mellin moments of the fractional-part and integer-part functions.

Everything in here is one of three kinds of object:

* exact zeta-combinations: values of integrals like
  ``int_0^1 {1/t}^a [1/t]^b t^(s-1) dt`` expressed as rational-coefficient
  combinations of ``zeta(s - j)``, stored symbolically and evaluated late;
* convergent series routes (the generalized weight ``(1-t^b)^(-alpha)``,
  the alternating/direct transforms ``I_j``/``J_j``, an auxiliary shifted
  power sum), each with an explicit tail bound or acceleration; and
* independent numeric oracles: a k-sum with exact inner integrals for the
  moment integrals, and singularity-split quadrature for the weighted and
  paired integrals.

Closed forms are never trusted on their own; the test suite pins each one
against the matching oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Tuple

from mpmath import mp

from .errors import ConvergenceError, DomainError, PoleError
from .mpcore import (
    DEFAULT_PRECISION,
    HPComplex,
    RationalPolynomial,
    rational_to_mpf,
)
from .quadrature import tanh_sinh

_GUARD = 24
_SERIES_BUDGET = 200_000


def _to_mpc(value, precision_bits: int) -> mp.mpc:
    if isinstance(value, HPComplex):
        return value.to_mpc()
    with mp.workprec(precision_bits):
        if isinstance(value, Fraction):
            return mp.mpc(rational_to_mpf(value, precision_bits))
        return mp.mpc(value)


def _wrap(value, precision_bits: int) -> HPComplex:
    # conversion must not round at the ambient context precision
    with mp.workprec(precision_bits + _GUARD):
        value = mp.mpc(value)
    return HPComplex(value.real, value.imag, precision_bits)


def _rational_or_none(value) -> Optional[Fraction]:
    """Exact real-rational reading of value, or None."""
    if isinstance(value, HPComplex):
        if value.imag != 0:
            return None
        value = value.real
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float) and value == int(value):
        return Fraction(int(value))
    if isinstance(value, mp.mpf) and mp.isint(value):
        return Fraction(int(value))
    if isinstance(value, (complex, mp.mpc)):
        if value.imag == 0:
            return _rational_or_none(value.real)
    return None


def _default_tolerance(precision_bits: int) -> mp.mpf:
    return mp.mpf(2) ** (-(precision_bits - 8))


# ---------------------------------------------------------------------------
# integral parameter record

@dataclass(frozen=True)
class FracIntegralSpec:
    """Parameters of int_0^1 {1/t}^alpha [1/t]^beta t^(s-1) (1-t^b)^(-alpha_denom) dt.

    beta is a true integer exponent; alpha may be any exponent with
    Re alpha > -1.  The weight exponent alpha_denom is kept separate from
    alpha because the two never apply at once in the closed forms.
    """

    alpha: object
    beta: int
    s: object
    b: object = 1
    alpha_denom: object = 0

    def __post_init__(self):
        if not isinstance(self.beta, int) or self.beta < 0:
            raise DomainError("beta must be a nonnegative integer")
        a = _to_mpc(self.alpha, DEFAULT_PRECISION)
        if not a.real > -1:
            raise DomainError("the fractional-part exponent needs Re alpha > -1")
        s = _to_mpc(self.s, DEFAULT_PRECISION)
        if not s.real > self.beta:
            raise DomainError(f"need Re s > beta = {self.beta}")
        b = _to_mpc(self.b, DEFAULT_PRECISION)
        if b.imag != 0 or not b.real > 0:
            raise DomainError("b must be a positive real")
        w = _to_mpc(self.alpha_denom, DEFAULT_PRECISION)
        if not (0 <= w.real < 1):
            raise DomainError("the weight exponent needs 0 <= Re alpha_denom < 1")


# ---------------------------------------------------------------------------
# symbolic zeta-combinations

@dataclass(frozen=True)
class ZetaCombination:
    """A value of the form (R(s) + sum_j N_j(s) zeta(s-j)) / D(s).

    Coefficients stay exact rational polynomials until evaluation, so two
    derivations of the same integral can be compared symbolically.  At an
    argument where some zeta factor hits its pole (s - j = 1) the value is
    still finite provided N_j vanishes there; evaluate() then substitutes
    the derivative N_j'(s) for N_j(s) zeta(s-j), which is the limit because
    the zeta pole at 1 has residue 1.
    """

    terms: Tuple[Tuple[int, RationalPolynomial], ...]
    denominator: RationalPolynomial
    rational_numerator: RationalPolynomial = RationalPolynomial.zero()

    def coefficient(self, j: int) -> RationalPolynomial:
        for jj, poly in self.terms:
            if jj == j:
                return poly
        return RationalPolynomial.zero()

    def evaluate(self, s, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
        workprec = precision_bits + _GUARD
        sr = _rational_or_none(s)
        with mp.workprec(workprec):
            z = _to_mpc(s, workprec)
            if sr is not None:
                den_exact = self.denominator.eval_rational(sr)
                if den_exact == 0:
                    raise PoleError(f"denominator vanishes at s = {sr}")
                den = mp.mpc(rational_to_mpf(den_exact, workprec))
            else:
                den = self.denominator.eval_mpc(z, workprec)
                if den == 0:
                    raise PoleError(f"denominator vanishes at s = {z}")
            total = self.rational_numerator.eval_mpc(z, workprec)
            for j, nj in self.terms:
                if sr is not None and sr - j == 1:
                    # zeta pole; finite only if the coefficient vanishes
                    if nj.eval_rational(sr) != 0:
                        raise PoleError(
                            f"zeta(1) coefficient does not vanish at s = {sr}"
                        )
                    total += nj.derivative().eval_mpc(z, workprec)
                else:
                    total += nj.eval_mpc(z, workprec) * mp.zeta(z - j)
            return _wrap(total / den, precision_bits)


def _poly(*ascending) -> RationalPolynomial:
    return RationalPolynomial(tuple(Fraction(c) for c in ascending))


def moment_combination(alpha: int, beta: int) -> ZetaCombination:
    """Zeta-combination for int_0^1 {1/t}^alpha [1/t]^beta t^(s-1) dt.

    alpha must be 1 or 2.  For alpha = 1 the denominator is s(s-1); for
    alpha = 2 it is s(s-1)(s-2).  The quadratic case with beta = 0 has no
    combination of this shape and is refused.
    """
    if alpha not in (1, 2):
        raise DomainError("closed combinations exist for alpha in {1, 2} only")
    if not isinstance(beta, int) or beta < 0:
        raise DomainError("beta must be a nonnegative integer")
    n = beta
    if alpha == 1:
        denominator = _poly(0, -1, 1)  # s(s-1)
        if n == 0:
            # 1/(s-1) - zeta(s)/s  ==  (s + (1-s) zeta(s)) / (s(s-1))
            return ZetaCombination(
                terms=((0, _poly(1, -1)),),
                denominator=denominator,
                rational_numerator=_poly(0, 1),
            )
        sign = -1 if n % 2 == 0 else 1
        terms = [(0, _poly(-sign, sign))]  # (-1)^(n+1) (s-1)
        for j in range(1, n + 1):
            sgn = (-1) ** (n - j)
            const = math.comb(n, j - 1) + math.comb(n, j)
            terms.append((j, _poly(sgn * const, -sgn * math.comb(n, j))))
        return ZetaCombination(terms=tuple(terms), denominator=denominator)
    if n == 0:
        raise DomainError(
            "the quadratic fractional-part moment needs an integer-part factor"
        )
    # alpha == 2: accumulate three shifted bands of binomial coefficients
    coeffs = {j: RationalPolynomial.zero() for j in range(n + 2)}
    s_minus_1 = _poly(-1, 1)
    s_minus_2 = _poly(-2, 1)
    for ell in range(n + 1):
        c = (-1) ** (n - ell) * math.comb(n, ell)
        coeffs[ell] = coeffs[ell] - (s_minus_1 * s_minus_2).scale(c)
        coeffs[ell + 1] = coeffs[ell + 1] - s_minus_2.scale(2 * c)
        if ell <= n - 1:
            coeffs[ell + 2] = coeffs[ell + 2] - _poly(2 * c)
    terms = tuple(
        (j, poly) for j, poly in sorted(coeffs.items()) if not poly.is_zero
    )
    return ZetaCombination(
        terms=terms, denominator=_poly(0, 2, -3, 1)  # s(s-1)(s-2)
    )


def frac_int_moments(
    spec: FracIntegralSpec, precision_bits: int = DEFAULT_PRECISION
) -> HPComplex:
    """Closed value of the mixed moment integral for alpha in {1, 2}.

    The quadratic case needs the stronger half-plane Re s > beta + 1; both
    cases tolerate the boundary integers s = beta + alpha where a zeta
    factor hits its pole but the combination stays finite.
    """
    ar = _rational_or_none(spec.alpha)
    if ar is None or ar.denominator != 1 or int(ar) not in (1, 2):
        raise DomainError("closed moments require alpha in {1, 2}")
    alpha = int(ar)
    br = _rational_or_none(spec.b)
    if br != 1 or _rational_or_none(spec.alpha_denom) != 0:
        raise DomainError("closed moments cover b = 1 with no denominator weight")
    z = _to_mpc(spec.s, precision_bits + _GUARD)
    if alpha == 2 and not z.real > spec.beta + 1:
        raise DomainError(f"need Re s > beta + 1 = {spec.beta + 1}")
    combo = moment_combination(alpha, spec.beta)
    return combo.evaluate(spec.s, precision_bits)


def moment_boundary_value(
    alpha: int, beta: int, precision_bits: int = DEFAULT_PRECISION
) -> HPComplex:
    """Moment value at the integer boundary s = beta + alpha.

    Assembled from the explicitly written limit expressions rather than the
    generic pole-cancellation rule in ZetaCombination.evaluate; the tests
    hold the two against each other and against a Richardson limit.
    """
    if alpha not in (1, 2):
        raise DomainError("boundary formulas exist for alpha in {1, 2} only")
    if not isinstance(beta, int) or beta < 1:
        raise DomainError("boundary formulas need an integer-part exponent >= 1")
    n = beta
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        if alpha == 1:
            acc = mp.mpf(-1)
            for ell in range(0, n - 1):
                c = math.comb(n, ell) - math.comb(n, ell + 1) * n
                acc -= (-1) ** (n - ell) * c * mp.zeta(n - ell)
            acc += (-1) ** (n + 1) * n * mp.zeta(n + 1)
            value = acc / (n * (n + 1))
        else:
            acc = mp.mpf(2)
            for ell in range(0, n - 1):
                c = (-1) ** (n - ell) * math.comb(n, ell)
                acc += c * (
                    2 * mp.zeta(n - ell)
                    + 2 * n * mp.zeta(n - ell + 1)
                    + n * (n + 1) * mp.zeta(n - ell + 2)
                )
            acc -= n * (n - 1) * mp.zeta(2)
            acc += -(n ** 2) * (n + 1) * mp.zeta(3)
            value = -acc / (n * (n + 1) * (n + 2))
        return _wrap(value, precision_bits)


def richardson_extrapolate(values, precision_bits: int = DEFAULT_PRECISION) -> mp.mpc:
    """Extrapolate f(eps) to eps = 0 from samples at eps_i = eps_0 / 2^i.

    values[i] is the sample at the i-th halving.  Assumes f admits a power
    expansion in eps, which holds for our use (analytic limits approached
    along s0 + 2^-i).
    """
    if len(values) < 2:
        raise DomainError("extrapolation needs at least two samples")
    with mp.workprec(precision_bits + _GUARD):
        column = [_to_mpc(v, precision_bits + _GUARD) for v in values]
        order = 0
        while len(column) > 1:
            order += 1
            factor = mp.mpf(2) ** order
            column = [
                (factor * column[i + 1] - column[i]) / (factor - 1)
                for i in range(len(column) - 1)
            ]
        return column[0]


# ---------------------------------------------------------------------------
# basic and weighted fractional-part transforms

def frac_basic(s, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """int_0^1 {1/t} t^(s-1) dt = 1/(s-1) - zeta(s)/s, for Re s > 1."""
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        z = _to_mpc(s, workprec)
        if not z.real > 1:
            raise DomainError("need Re s > 1 (the s = 1 cancellation is not taken)")
        return _wrap(1 / (z - 1) - mp.zeta(z) / z, precision_bits)


def frac_general(
    s,
    b,
    alpha,
    precision_bits: int = DEFAULT_PRECISION,
    tolerance=None,
) -> HPComplex:
    """Weighted transform int_0^1 {1/t} t^(s-1) (1-t^b)^(-alpha) dt.

    Beta-function leading term minus (1/s) times a j-sum of Gauss series;
    the j >= 2 part is resummed as sum_i c_i (zeta(s + b i) - 1), which
    converges geometrically in i.  alpha = 0 collapses exactly to
    frac_basic.  The alpha -> 1 endpoint lives in alpha_one_limit.
    """
    workprec = precision_bits + _GUARD
    ar = _rational_or_none(alpha)
    if ar == 0:
        return frac_basic(s, precision_bits)
    with mp.workprec(workprec):
        z = _to_mpc(s, workprec)
        bb = _to_mpc(b, workprec)
        aa = _to_mpc(alpha, workprec)
        if not z.real > 1:
            raise DomainError("need Re s > 1")
        if bb.imag != 0 or not bb.real > 0:
            raise DomainError("b must be a positive real")
        bb = bb.real
        if not (0 <= aa.real < 1):
            raise DomainError("need 0 <= Re alpha < 1; the limit has its own route")
        tol = mp.mpf(tolerance) if tolerance is not None else _default_tolerance(precision_bits)
        leading = (
            mp.gamma(1 - aa)
            * mp.gamma((z + bb - 1) / bb)
            / mp.gamma((z + bb - aa * bb - 1) / bb)
            / (z - 1)
        )
        ratio = z / bb
        jsum = mp.gamma(1 + ratio) * mp.gamma(1 - aa) / mp.gamma(1 + ratio - aa)
        c = mp.mpc(1)
        prev = mp.inf
        for i in range(_SERIES_BUDGET):
            term = c * (mp.zeta(z + bb * i) - 1)
            jsum += term
            size = abs(term)
            if i >= 2 and size < tol / 8 and prev < tol / 8:
                break
            prev = size
            c *= (aa + i) * (ratio + i) / ((1 + ratio + i) * (i + 1))
        else:
            raise ConvergenceError("weighted transform series exhausted its budget")
        return _wrap(leading - jsum / z, precision_bits)


def alpha_one_limit(s, b=1, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """Endpoint value lim_{alpha -> 1} of the weighted transform.

    The beta-ratio term and the j = 1 Gauss term both blow up like
    Gamma(1 - alpha); their poles cancel and leave digamma values:

        (1/b) [psi(s/b) - psi((s-1)/b)]
          - (1/b) sum_{i>=0} (zeta(s + b i) - 1) / (s/b + i).

    At s = 2, b = 1 this telescopes to the Euler constant.
    """
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        z = _to_mpc(s, workprec)
        bb = _to_mpc(b, workprec)
        if not z.real > 1:
            raise DomainError("need Re s > 1")
        if bb.imag != 0 or not bb.real > 0:
            raise DomainError("b must be a positive real")
        bb = bb.real
        ratio = z / bb
        total = mp.digamma(ratio) - mp.digamma((z - 1) / bb)
        tol = _default_tolerance(precision_bits)
        prev = mp.inf
        for i in range(_SERIES_BUDGET):
            term = (mp.zeta(z + bb * i) - 1) / (ratio + i)
            total -= term
            size = abs(term)
            if i >= 2 and size < tol / 8 and prev < tol / 8:
                break
            prev = size
        else:
            raise ConvergenceError("endpoint series exhausted its budget")
        return _wrap(total / bb, precision_bits)


# ---------------------------------------------------------------------------
# auxiliary shifted power sum

@dataclass(frozen=True)
class SublemmaState:
    """Order and shift of the sum S_n(u) = sum_{k>=2} (u+k)^-(n+1) / (u+k-1)."""

    order: int
    u: object

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise DomainError("order must be a positive integer")
        uu = _to_mpc(self.u, DEFAULT_PRECISION)
        if not uu.real > -1:
            raise DomainError("need Re u > -1")


def sublemma_sum(state: SublemmaState, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """Telescoped closed form 1/(1+u) - sum_{k=0}^{n-1} zeta(k+2, u+2)."""
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        uu = _to_mpc(state.u, workprec)
        value = 1 / (1 + uu)
        for k in range(state.order):
            value -= mp.zeta(k + 2, uu + 2)
        return _wrap(value, precision_bits)


def sublemma_sum_series(
    state: SublemmaState,
    precision_bits: int = DEFAULT_PRECISION,
    tolerance=None,
    head_terms: int = 64,
) -> HPComplex:
    """Summation of S_n(u): explicit head, then the k-tail folded exactly.

    Past k = head_terms the factor 1/(u+k-1) is expanded in powers of
    1/(u+k), turning the remainder into Hurwitz zetas with geometric decay
    in the expansion order.  Independent of the telescoped closed form.
    """
    workprec = precision_bits + _GUARD
    n = state.order
    if head_terms < 4:
        raise DomainError("need a head of at least 4 terms")
    with mp.workprec(workprec):
        uu = _to_mpc(state.u, workprec)
        tol = mp.mpf(tolerance) if tolerance is not None else _default_tolerance(precision_bits)
        total = mp.mpc(0)
        for k in range(2, head_terms + 1):
            total += (uu + k) ** (-(n + 1)) / (uu + k - 1)
        shift = uu + head_terms + 1
        for m in range(_SERIES_BUDGET):
            term = mp.zeta(n + 2 + m, shift)
            total += term
            if abs(term) < tol / 4:
                return _wrap(total, precision_bits)
        raise ConvergenceError("shifted power sum exhausted its budget")


# ---------------------------------------------------------------------------
# the paired fractional-part integral

def _pair_main_term(s: int, workprec: int) -> mp.mpf:
    """Euler-constant piece: gamma + sum_{l=2}^s zeta(l)/l - H_s + 2^-s / s."""
    with mp.workprec(workprec):
        h = Fraction(0)
        for i in range(1, s + 1):
            h += Fraction(1, i)
        value = mp.euler - rational_to_mpf(h, workprec) + mp.mpf(2) ** (-s) / s
        for ell in range(2, s + 1):
            value += mp.zeta(ell) / ell
        return value


def _pair_correction(s: int, workprec: int, tol) -> mp.mpf:
    """Alternating-binomial piece of the paired integral.

    For s >= 2 this is a finite binomial sum over elementary T terms; at
    s = 1 those terms no longer terminate and the value comes from a
    Hurwitz-zeta series with geometric (ratio 1/4) decay.
    """
    with mp.workprec(workprec):
        if s >= 2:
            total = mp.mpf(0)
            for j in range(s - 1):
                m = j + 3
                t_m = mp.mpf(2) ** (2 - m) / (m - 2)
                t_m += (1 - mp.mpf(2) ** (1 - m) - mp.zeta(m - 1)) / (m - 1)
                total += (-1) ** j * math.comb(s - 2, j) * t_m
            return total
        total = mp.zeta(2) - mp.mpf(3) / 2
        for i in range(2, _SERIES_BUDGET):
            term = (mp.zeta(2 * i - 1, 2) - mp.zeta(2 * i, 2)) / i
            total -= term
            if term < tol / 4:
                return total
        raise ConvergenceError("paired-integral series exhausted its budget")


def frac_pair_integral(s: int, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """int_0^1 {1/x} {1/(1-x)} x^(s-1) dx for integer s >= 1.

    Assembled from two closed pieces; s = 1 gives 2*gamma - 1.  The
    assembly is cross-checked against split quadrature by
    pair_integral_report, not trusted blind.
    """
    if not isinstance(s, int) or s < 1:
        raise DomainError("the paired integral is implemented for integer s >= 1")
    workprec = precision_bits + _GUARD
    tol = _default_tolerance(precision_bits)
    with mp.workprec(workprec):
        value = _pair_main_term(s, workprec) + _pair_correction(s, workprec, tol)
        return _wrap(value, precision_bits)


@dataclass(frozen=True)
class OracleQuadrature:
    value: HPComplex
    error_bound: mp.mpf


def _zeta_moment_integral(sigma, shift, workprec, tol) -> mp.mpc:
    """int_0^1 t zeta(sigma, shift + t) dt by tanh-sinh (smooth integrand)."""
    def f(t, dist_a, dist_b):
        return t * mp.zeta(sigma, shift + t)

    result = tanh_sinh(f, 0, 1, workprec, tolerance=tol, min_level=3, max_level=10)
    return mp.mpc(result.value)


def pair_integral_quadrature(
    s: int,
    precision_bits: int = 96,
    tolerance=None,
    segments: int = 12,
) -> OracleQuadrature:
    """Direct quadrature of the paired integral, split at unit fractions.

    Both halves of (0,1) reduce to sums over intervals [1/(k+1), 1/k] where
    the integrand is smooth; past k = segments the sum is folded, via the
    substitution x = 1/(k+t), into integrals of Hurwitz zeta against t dt,
    with a geometric truncation bound in the expansion order.
    """
    if not isinstance(s, int) or s < 1:
        raise DomainError("the paired integral is implemented for integer s >= 1")
    if segments < 3:
        raise DomainError("need at least 3 unit-fraction segments")
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        tol = mp.mpf(tolerance) if tolerance is not None else _default_tolerance(precision_bits)
        k_max = segments
        total = mp.mpf(0)
        bound = mp.mpf(0)

        # f1: weight on the left half; f2: mirrored weight from the right half
        def f1(y):
            return y ** s / (1 - y)

        def f2(y):
            return y * (1 - y) ** (s - 2)

        for weight in (f1, f2):
            for k in range(2, k_max):
                lo = mp.mpf(1) / (k + 1)
                hi = mp.mpf(1) / k

                def g(y, dist_a, dist_b, k=k):
                    return (1 / y - k) * weight(y)

                piece = tanh_sinh(
                    g, lo, hi, workprec, tolerance=tol / (4 * k_max), min_level=3
                )
                total += mp.mpf(piece.value)
                bound += abs(piece.error_estimate)

        # tails: power coefficients of each weight about y = 0
        for m in range(_SERIES_BUDGET):
            sigma = s + m + 2
            term = _zeta_moment_integral(sigma, k_max, workprec, tol / 16)
            total += mp.mpf(term.real)
            cap = (mp.mpf(k_max) ** (-sigma) + mp.mpf(k_max) ** (1 - sigma) / (sigma - 1)) / 2
            if cap < tol / 16:
                bound += cap * 2
                break
        else:
            raise ConvergenceError("tail expansion exhausted its budget")
        if s == 1:
            coefficients = None  # same all-ones expansion as the first weight
        else:
            coefficients = [
                (-1) ** m * math.comb(s - 2, m) for m in range(s - 1)
            ]
        m = 0
        while True:
            c = 1 if coefficients is None else (coefficients[m] if m < len(coefficients) else 0)
            if c == 0 and coefficients is not None:
                break
            sigma = m + 3
            term = _zeta_moment_integral(sigma, k_max, workprec, tol / 16)
            total += c * mp.mpf(term.real)
            cap = abs(mp.mpf(c)) * (
                mp.mpf(k_max) ** (-sigma) + mp.mpf(k_max) ** (1 - sigma) / (sigma - 1)
            ) / 2
            if coefficients is None and cap < tol / 16:
                bound += cap * 2
                break
            m += 1
            if m > _SERIES_BUDGET:
                raise ConvergenceError("tail expansion exhausted its budget")
        return OracleQuadrature(
            value=_wrap(total, precision_bits), error_bound=mp.mpf(bound)
        )


@dataclass(frozen=True)
class PairIntegralReport:
    """Closed assembly vs direct quadrature, with their absolute gap."""

    closed: HPComplex
    quadrature: HPComplex
    difference: mp.mpf
    quadrature_error_bound: mp.mpf


def pair_integral_report(
    s: int, precision_bits: int = 96, tolerance=None
) -> PairIntegralReport:
    closed = frac_pair_integral(s, precision_bits)
    quad = pair_integral_quadrature(s, precision_bits, tolerance=tolerance)
    with mp.workprec(precision_bits + _GUARD):
        diff = abs(closed.to_mpc() - quad.value.to_mpc())
    return PairIntegralReport(
        closed=closed,
        quadrature=quad.value,
        difference=diff,
        quadrature_error_bound=quad.error_bound,
    )


# ---------------------------------------------------------------------------
# alternating / direct transforms

class TransformKind(Enum):
    FERMI = "fermi"
    BOSE = "bose"


@dataclass(frozen=True)
class FermiBoseResult:
    kind: TransformKind
    j: int
    s: HPComplex
    series_value: HPComplex
    closed_value: HPComplex
    difference: mp.mpf
    precision_bits: int


def _alternating_sum(term: Callable[[int], mp.mpf], count: int) -> mp.mpf:
    """Chebyshev-weighted acceleration of sum (-1)^k term(k), term(k) >= 0."""
    d = (3 + 2 * mp.sqrt(2)) ** count
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    total = mp.mpf(0)
    for k in range(count):
        c = b - c
        total += c * term(k)
        b = (k + count) * (k - count) * b / ((k + mp.mpf("0.5")) * (k + 1))
    return total / d


def _eta_hurwitz(sigma, shift, workprec) -> mp.mpc:
    """Alternating Hurwitz sum sum_{m>=0} (-1)^m (m+shift)^-sigma.

    Written as a difference of two Hurwitz zetas on halved arguments; at
    sigma = 1 the two poles cancel and leave digamma values.
    """
    with mp.workprec(workprec):
        sigma = mp.mpc(sigma)
        half = mp.mpf(shift) / 2
        if sigma == 1:
            return (mp.digamma(half + mp.mpf("0.5")) - mp.digamma(half)) / 2
        return mp.mpf(2) ** (-sigma) * (
            mp.zeta(sigma, half) - mp.zeta(sigma, half + mp.mpf("0.5"))
        )


def _rising_factorial_coeffs(j: int) -> list[int]:
    """Integer coefficients e_q with prod_{m=1}^{j-1}(X - m) = sum e_q X^q."""
    coeffs = [1]
    for m in range(1, j):
        nxt = [0] * (len(coeffs) + 1)
        for q, c in enumerate(coeffs):
            nxt[q + 1] += c
            nxt[q] -= c * m
        coeffs = nxt
    return coeffs


def _fermi_closed_two(z, sr, workprec) -> mp.mpc:
    with mp.workprec(workprec):
        if sr == 1:
            return mp.zeta(2) / 2 - mp.log(2)
        return mp.gamma(z + 1) * (
            (1 - mp.mpf(2) ** (-z)) * mp.zeta(z + 1)
            + (mp.mpf(2) ** (1 - z) - 1) * mp.zeta(z)
        )


def _fermi_closed_three(z, sr, workprec) -> mp.mpc:
    with mp.workprec(workprec):
        two = mp.mpf(2)
        if sr == 1:
            return (1 - 6 * mp.log(2) + 2 * mp.zeta(2)) / 4
        if sr == 2:
            bracket = 4 * mp.log(2) - 6 * mp.zeta(2) + 6 * mp.zeta(3)
            return mp.gamma(3) * bracket / 8
        bracket = (
            (two ** z - 4) * mp.zeta(z - 1)
            + 3 * (2 - two ** z) * mp.zeta(z)
            + 2 * (two ** z - 1) * mp.zeta(z + 1)
        )
        return mp.gamma(z + 1) * two ** (-z - 1) * bracket


def _transform_closed(kind: TransformKind, j: int, z, sr, workprec) -> mp.mpc:
    if kind is TransformKind.FERMI and j == 2:
        return _fermi_closed_two(z, sr, workprec)
    if kind is TransformKind.FERMI and j == 3:
        return _fermi_closed_three(z, sr, workprec)
    with mp.workprec(workprec):
        coeffs = _rising_factorial_coeffs(j)
        total = mp.mpc(0)
        for q, e_q in enumerate(coeffs):
            if e_q == 0:
                continue
            sigma = z + 1 - q
            if kind is TransformKind.BOSE:
                total += e_q * mp.zeta(sigma, j)
            else:
                total += e_q * _eta_hurwitz(sigma, j, workprec)
        return mp.gamma(z + 1) * total / mp.factorial(j - 1)


def fermi_bose_transform(
    j: int,
    kind: TransformKind,
    s,
    precision_bits: int = DEFAULT_PRECISION,
) -> FermiBoseResult:
    """Series sum_{n>=0} (±1)^n (j)_n / n! / (n+j)^(s+1), times Gamma(s+1).

    Evaluated twice: by summing the defining series (accelerated for the
    alternating kind) and through a closed zeta/alternating-zeta
    combination.  j = 2, 3 alternating use the explicit two/three-term
    closed forms, with their removable values at s = 1 and s = 2.
    """
    if not isinstance(j, int) or j < 1:
        raise DomainError("j must be a positive integer")
    if not isinstance(kind, TransformKind):
        raise DomainError(f"unknown transform kind: {kind!r}")
    workprec = precision_bits + 2 * _GUARD
    with mp.workprec(workprec):
        z = _to_mpc(s, workprec)
        if kind is TransformKind.BOSE and not z.real > j - 1:
            raise DomainError(f"direct series needs Re s > {j - 1}")
        if kind is TransformKind.FERMI and not z.real > j - 2:
            raise DomainError(f"alternating series needs Re s > {j - 2}")
        sr = _rational_or_none(s)
        closed = _transform_closed(kind, j, z, sr, workprec)

        def magnitude(n):
            # (j)_n / n! written as a polynomial so the summand stays smooth
            # in n (the Euler-Maclaurin route differentiates it)
            binom = mp.mpf(1)
            for m in range(1, j):
                binom *= (n + m) / m
            return binom * (n + j) ** (-(z + 1))

        if kind is TransformKind.FERMI:
            if z.imag == 0:
                count = int(0.4 * workprec) + 12
                series = _alternating_sum(lambda n: mp.mpf(magnitude(n).real), count)
            else:
                try:
                    series = mp.nsum(
                        lambda n: (-1) ** int(n) * magnitude(int(n)), [0, mp.inf], method="l"
                    )
                except mp.libmp.NoConvergence as exc:
                    raise ConvergenceError("alternating series did not converge") from exc
        else:
            try:
                # algebraic decay: Euler-Maclaurin, not sequence extrapolation
                series = mp.nsum(magnitude, [0, mp.inf], method="e")
            except mp.libmp.NoConvergence as exc:
                raise ConvergenceError("direct series did not converge") from exc
        series = mp.gamma(z + 1) * series
        return FermiBoseResult(
            kind=kind,
            j=j,
            s=_wrap(z, precision_bits),
            series_value=_wrap(series, precision_bits),
            closed_value=_wrap(closed, precision_bits),
            difference=abs(mp.mpc(series) - mp.mpc(closed)),
            precision_bits=precision_bits,
        )


# ---------------------------------------------------------------------------
# the brute-force oracle

@dataclass(frozen=True)
class FracOracleResult:
    value: HPComplex
    error_bound: mp.mpf
    lower: Optional[mp.mpf]
    upper: Optional[mp.mpf]
    terms_used: int


def _inner_exact(alpha: int, k: int, z, workprec) -> mp.mpc:
    """int_0^1 u^alpha (u+k)^-(s+1) du in closed form, alpha in {1, 2}."""
    with mp.workprec(workprec):
        kk = mp.mpf(k)
        if alpha == 1:
            return -(kk + 1) ** (-z) / z + (
                (kk + 1) ** (1 - z) - kk ** (1 - z)
            ) / (z * (1 - z))
        g = -((kk + 1) ** (1 - z)) / (z - 1) + (
            (kk + 1) ** (2 - z) - kk ** (2 - z)
        ) / ((z - 1) * (2 - z))
        return -((kk + 1) ** (-z)) / z + 2 * g / z


def _inner_quadrature(aa, k: int, z, workprec, tol) -> mp.mpc:
    def f(u, dist_a, dist_b):
        return dist_a ** aa * (u + k) ** (-(z + 1))

    result = tanh_sinh(f, 0, 1, workprec, tolerance=tol, min_level=3)
    return mp.mpc(result.value)


def numeric_fracpart_oracle(
    spec: FracIntegralSpec,
    tolerance=None,
    precision_bits: int = DEFAULT_PRECISION,
) -> FracOracleResult:
    """Brute-force moment value: k-sum of inner integrals plus analytic tail.

    The k-sum runs the first few dozen terms with the inner integral done
    exactly (alpha 1 or 2) or by quadrature; the remainder expands
    (u+k)^-(s+1) about u = 1, turning into Beta factors against Hurwitz
    zetas, summed until the expansion terms pass below tolerance.  Real
    parameter sets also get the elementary sandwich bounds.
    """
    if _rational_or_none(spec.b) != 1 or _rational_or_none(spec.alpha_denom) != 0:
        raise DomainError(
            "the k-sum oracle covers b = 1 without the denominator weight; "
            "use frac_weight_quadrature for the weighted transform"
        )
    workprec = precision_bits + 2 * _GUARD
    beta = spec.beta
    with mp.workprec(workprec):
        z = _to_mpc(spec.s, workprec)
        aa = _to_mpc(spec.alpha, workprec)
        if not z.real > beta + max(0, aa.real - 1):
            raise DomainError("oracle needs Re s > beta + max(0, Re alpha - 1)")
        tol = mp.mpf(tolerance) if tolerance is not None else _default_tolerance(precision_bits)
        ar = _rational_or_none(spec.alpha)
        exact_alpha = int(ar) if ar is not None and ar.denominator == 1 and ar in (1, 2) else None
        sr = _rational_or_none(spec.s)
        if exact_alpha is not None and sr in ((1,) if exact_alpha == 1 else (1, 2)):
            raise DomainError(
                f"the exact inner integral degenerates at s = {sr}; "
                "this oracle point is out of scope"
            )

        k_sum_terms = 40
        total = mp.mpc(0)
        quad_error = mp.mpf(0)
        for k in range(1, k_sum_terms + 1):
            if exact_alpha is not None:
                inner = _inner_exact(exact_alpha, k, z, workprec)
            else:
                inner = _inner_quadrature(aa, k, z, workprec, tol / (8 * k_sum_terms))
                quad_error += tol / (8 * k_sum_terms)
            total += mp.mpf(k) ** beta * inner

        # tail over k > k_sum_terms, expanded about u = 1
        shift = k_sum_terms + 2
        rf = mp.mpc(1)  # (s+1)_i / i!
        i = 0
        tail_bound = mp.mpf(0)
        while True:
            zeta_sum = mp.mpc(0)
            for r in range(beta + 1):
                zeta_sum += (
                    math.comb(beta, r)
                    * (-1) ** (beta - r)
                    * mp.zeta(z + 1 + i - r, shift)
                )
            term = rf * mp.beta(aa + 1, i + 1) * zeta_sum
            total += term
            if i > 3 and abs(term) < tol / 10:
                tail_bound = 2 * abs(term)
                break
            rf *= (z + 1 + i) / (i + 1)
            i += 1
            if i > 10_000:
                raise ConvergenceError("oracle tail expansion exhausted its budget")

        lower = upper = None
        if z.imag == 0 and aa.imag == 0:
            lo = mp.mpf(0)
            for r in range(beta + 1):
                lo += math.comb(beta, r) * (-1) ** (beta - r) * (mp.zeta(z.real + 1 - r) - 1)
            lower = lo / (aa.real + 1)
            upper = mp.zeta(z.real + 1 - beta) / (aa.real + 1)
        return FracOracleResult(
            value=_wrap(total, precision_bits),
            error_bound=mp.mpf(tail_bound + quad_error),
            lower=lower,
            upper=upper,
            terms_used=k_sum_terms + i + 1,
        )


def frac_weight_quadrature(
    s,
    b,
    alpha,
    precision_bits: int = 96,
    tolerance=None,
    segments: int = 12,
) -> OracleQuadrature:
    """Direct quadrature oracle for the weighted transform.

    Unit-fraction splitting up to `segments`, then the same fold as the
    paired-integral oracle: the k-tail becomes Hurwitz zeta integrals via
    x = 1/(k+t), with the weight expanded binomially in (k+t)^-b.
    """
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        z = _to_mpc(s, workprec)
        bb = _to_mpc(b, workprec)
        aa = _to_mpc(alpha, workprec)
        if not z.real > 1:
            raise DomainError("need Re s > 1")
        if bb.imag != 0 or not bb.real > 0:
            raise DomainError("b must be a positive real")
        bb = bb.real
        if not (0 <= aa.real < 1):
            raise DomainError("need 0 <= Re alpha < 1")
        tol = mp.mpf(tolerance) if tolerance is not None else _default_tolerance(precision_bits)
        total = mp.mpc(0)
        bound = mp.mpf(0)
        for k in range(1, segments):
            lo = mp.mpf(1) / (k + 1)
            hi = mp.mpf(1) / k

            def g(t, dist_a, dist_b, k=k):
                # 1 - t^b from the distance to the right endpoint of (1/2, 1)
                if k == 1:
                    w = -mp.expm1(bb * mp.log1p(-dist_b))
                else:
                    w = 1 - t ** bb
                return (1 / t - k) * t ** (z - 1) * w ** (-aa)

            piece = tanh_sinh(
                g, lo, hi, workprec, tolerance=tol / (4 * segments), min_level=3
            )
            total += mp.mpc(piece.value)
            bound += abs(piece.error_estimate)
        # tail: (1 - x^b)^-alpha with x = 1/(k+t) expanded in (k+t)^-b
        coeff = mp.mpc(1)
        m = 0
        while True:
            sigma = z + 1 + bb * m

            def f(t, dist_a, dist_b, sigma=sigma):
                return t * mp.zeta(sigma, segments + t)

            piece = tanh_sinh(f, 0, 1, workprec, tolerance=tol / 16, min_level=3)
            total += coeff * mp.mpc(piece.value)
            sig_re = sigma.real
            cap = abs(coeff) * (
                mp.mpf(segments) ** (-sig_re)
                + mp.mpf(segments) ** (1 - sig_re) / (sig_re - 1)
            ) / 2
            if cap < tol / 16:
                bound += 2 * cap
                break
            coeff *= (aa + m) / (m + 1)
            m += 1
            if m > _SERIES_BUDGET:
                raise ConvergenceError("weight tail expansion exhausted its budget")
        return OracleQuadrature(
            value=_wrap(total, precision_bits), error_bound=mp.mpf(bound)
        )
