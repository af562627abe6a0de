"""Mellin transforms of Legendre and Ferrers functions on (0, 1).

M_n^m(s) factors as sqrt(pi) * 2^t * p_n^m(s) * Gamma((s+eps)/2) / Gamma((s+n+1)/2)
with an exact rational polynomial p_n^m for even m; odd m goes through the
three-term recursion in n with gamma-ratio seeds.  Everything else here is
an alternative route to the same numbers: hypergeometric representations,
finite Beta sums, direct quadrature, and the generating function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Dict, Tuple

import mpmath as mp

from .errors import DomainError
from .mpcore import (
    DEFAULT_PRECISION,
    GaussianRational,
    HPComplex,
    RationalPolynomial,
    as_rational,
)
from .quadrature import tanh_sinh
from .specfun import (
    HypergeometricSpec,
    double_factorial,
    ferrers,
    hyp_pfq,
    pochhammer_rational,
)

_GUARD = 24


def _to_mpc(value, workprec: int) -> mp.mpc:
    if isinstance(value, HPComplex):
        return value.to_mpc()
    if isinstance(value, GaussianRational):
        return value.to_mpc(workprec)
    with mp.workprec(workprec):
        if isinstance(value, Fraction):
            return mp.mpc(mp.mpf(value.numerator) / value.denominator)
        return mp.mpc(value)


def _wrap(value, precision_bits: int) -> HPComplex:
    # conversion must not round at the ambient context precision
    with mp.workprec(precision_bits + _GUARD):
        value = mp.mpc(value)
    return HPComplex(value.real, value.imag, precision_bits)


def _require_right_half_plane(s, workprec: int) -> mp.mpc:
    z = _to_mpc(s, workprec)
    if not z.real > 0:
        raise DomainError(f"transform defined for Re s > 0, got {z}")
    return z


# ---------------------------------------------------------------------------
# exact polynomial factors

@dataclass(frozen=True)
class GammaPrefactor:
    """sqrt(pi)^sqrt_pi_power * 2^two_power_exponent
    * Gamma((s+numerator_shift)/2) / Gamma((s+denominator_shift)/2).

    numerator_shift duplicates epsilon; both are kept because the parity
    flag is meaningful on its own (it drives the functional equation).
    """

    sqrt_pi_power: int
    two_power_exponent: int
    epsilon: int
    numerator_shift: int
    denominator_shift: int

    def __post_init__(self):
        if self.epsilon not in (0, 1):
            raise DomainError("epsilon must be 0 or 1")

    def evaluate(self, s, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
        workprec = precision_bits + _GUARD
        with mp.workprec(workprec):
            z = _to_mpc(s, workprec)
            value = (
                mp.sqrt(mp.pi) ** self.sqrt_pi_power
                * mp.power(2, self.two_power_exponent)
                * mp.gamma((z + self.numerator_shift) / 2)
                * mp.rgamma((z + self.denominator_shift) / 2)
            )
        return _wrap(value, precision_bits)


@dataclass(frozen=True)
class MellinClosedForm:
    prefactor: GammaPrefactor
    poly: RationalPolynomial
    n: int
    m: int

    def evaluate(self, s, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
        pref = self.prefactor.evaluate(s, precision_bits + 8)
        sval = pref.to_mpc()
        with mp.workprec(precision_bits + _GUARD):
            z = _to_mpc(s, precision_bits + _GUARD)
            value = sval * self.poly.eval_mpc(z, precision_bits + 8)
        return _wrap(value, precision_bits)


# integer coefficient lists with one shared denominator; one gcd reduction
# per recursion step keeps n = 200 comfortably under the time budget
_PolyInt = Tuple[Tuple[int, ...], int]
_POLY_CACHE: Dict[Tuple[int, int], _PolyInt] = {}


def _shift_plus_one(coeffs: Tuple[int, ...]) -> list:
    out = [0] * len(coeffs)
    for i, ci in enumerate(coeffs):
        if ci:
            binom = 1
            for j in range(i, -1, -1):
                out[j] += ci * binom
                binom = binom * j // (i - j + 1)
    return out


def _poly_int(n: int, m: int) -> _PolyInt:
    """(coeffs, denominator) of p_n^m, m even, via the two-branch recursion."""
    key = (n, m)
    if key in _POLY_CACHE:
        return _POLY_CACHE[key]
    base = (-1) ** m * double_factorial(2 * m - 1) * double_factorial(m - 1)
    prev2: _PolyInt = ((base,), 1)            # p_m^m
    _POLY_CACHE[(m, m)] = prev2
    if n == m:
        return prev2
    prev1: _PolyInt = (((2 * m + 1) * base,), 1)   # p_{m+1}^m
    _POLY_CACHE[(m + 1, m)] = prev1
    for k in range(m + 2, n + 1):
        if (k - m) % 2 == 0 and (k, m) in _POLY_CACHE:
            prev2, prev1 = prev1, _POLY_CACHE[(k, m)]
            continue
        a, da = prev1
        b, db = prev2
        shifted = _shift_plus_one(a)
        if (k - m) % 2 == 0:
            # p_k = (2/(k-m)) [ (2k-1) s p_{k-1}(s+1) - (k+m-1)(s+k-1) p_{k-2} ]
            t1 = [0] + [(2 * k - 1) * c for c in shifted]
            t2 = [0] * (len(b) + 1)
            for i, c in enumerate(b):
                c *= k + m - 1
                t2[i + 1] += c
                t2[i] += c * (k - 1)
            width = max(len(t1), len(t2))
            num = [2 * (db * (t1[i] if i < len(t1) else 0)
                        - da * (t2[i] if i < len(t2) else 0)) for i in range(width)]
            den = da * db * (k - m)
        else:
            # p_k = (1/(k-m)) [ (2k-1) p_{k-1}(s+1) - 2(k+m-1)(s+k-1) p_{k-2} ]
            t1 = [(2 * k - 1) * c for c in shifted]
            t2 = [0] * (len(b) + 1)
            for i, c in enumerate(b):
                c *= 2 * (k + m - 1)
                t2[i + 1] += c
                t2[i] += c * (k - 1)
            width = max(len(t1), len(t2))
            num = [db * (t1[i] if i < len(t1) else 0)
                   - da * (t2[i] if i < len(t2) else 0) for i in range(width)]
            den = da * db * (k - m)
        while num and num[-1] == 0:
            num.pop()
        g = gcd(den, 0)
        for c in num:
            g = gcd(g, c)
        if den < 0:
            g = -g
        num = tuple(c // g for c in num)
        den //= g
        current: _PolyInt = (num, den)
        _POLY_CACHE[(k, m)] = current
        prev2, prev1 = prev1, current
    return _POLY_CACHE[key]


def _two_power(n: int, m: int) -> int:
    return -(m // 2 + 1 + 2 * ((n - m) // 2))


def poly_factor(n: int, m: int = 0) -> MellinClosedForm:
    """Exact polynomial factor and gamma prefactor of M_n^m, m even.

    The two-power in the prefactor is fixed operationally: it is the unique
    exponent making the base case p_m^m = (-1)^m (2m-1)!! (m-1)!! exact, and
    it reproduces every special-value anchor (pi/2, pi/8, 9pi/128, ...).
    """
    if n < 0 or m < 0:
        raise DomainError("poly_factor requires n >= 0 and m >= 0")
    if m % 2 != 0:
        raise DomainError("polynomial factors exist for even m only")
    if m > n:
        raise DomainError(f"order m = {m} exceeds degree n = {n}")
    coeffs, den = _poly_int(n, m)
    poly = RationalPolynomial([Fraction(c, den) for c in coeffs])
    prefactor = GammaPrefactor(
        sqrt_pi_power=1,
        two_power_exponent=_two_power(n, m),
        epsilon=n % 2,
        numerator_shift=n % 2,
        denominator_shift=n + 1,
    )
    return MellinClosedForm(prefactor=prefactor, poly=poly, n=n, m=m)


# ---------------------------------------------------------------------------
# the transforms themselves

def _odd_order_exact(n: int, m: int, s: Fraction) -> Fraction:
    """M_n^m(s) for odd m and rational s; all values are exact rationals.

    Seeds: M_m^m and M_{m+1}^m = (2m+1) M_m^m(s+1); then the degree
    recursion (n-m) M_n^m = (2n-1) M_{n-1}^m(s+1) - (n+m-1) M_{n-2}^m(s).
    """
    memo: Dict[Tuple[int, int], Fraction] = {}

    def seed(shift: int) -> Fraction:
        sv = s + shift
        # Gamma((m+1)/2) = ((m-1)/2)! = (m-1)!!/2^((m-1)/2) for odd m;
        # Gamma(s/2)/Gamma((s+m+1)/2) = 1/(s/2)_((m+1)/2), integer count
        num = (-1) ** m * double_factorial(2 * m - 1) \
            * Fraction(double_factorial(m - 1), 2 ** ((m - 1) // 2))
        return num / 2 / pochhammer_rational(sv / 2, (m + 1) // 2)

    def value(k: int, shift: int) -> Fraction:
        if (k, shift) in memo:
            return memo[(k, shift)]
        if k == m:
            out = seed(shift)
        elif k == m + 1:
            out = (2 * m + 1) * seed(shift + 1)
        else:
            out = (Fraction(2 * k - 1) * value(k - 1, shift + 1)
                   - (k + m - 1) * value(k - 2, shift)) / (k - m)
        memo[(k, shift)] = out
        return out

    return value(n, 0)


def _odd_order_float(n: int, m: int, s: mp.mpc, workprec: int) -> mp.mpc:
    memo: Dict[Tuple[int, int], mp.mpc] = {}
    half = (m + 1) // 2
    lead = (-1) ** m * double_factorial(2 * m - 1) * double_factorial(m - 1) \
        / mp.power(2, half)

    def seed(shift: int) -> mp.mpc:
        sv = s + shift
        acc = mp.mpc(1)
        for j in range(half):
            acc *= sv / 2 + j
        return lead / acc

    def value(k: int, shift: int) -> mp.mpc:
        if (k, shift) in memo:
            return memo[(k, shift)]
        if k == m:
            out = seed(shift)
        elif k == m + 1:
            out = (2 * m + 1) * seed(shift + 1)
        else:
            out = ((2 * k - 1) * value(k - 1, shift + 1)
                   - (k + m - 1) * value(k - 2, shift)) / (k - m)
        memo[(k, shift)] = out
        return out

    return value(n, 0)


def mellin_recursion_reference(n: int, m: int, s,
                               precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """M_n^m(s) built purely from the degree recursion on transform values.

    Even m is seeded by the Beta-integral value of M_m^m,
    (2m-1)!! (m-1)!! sqrt(pi) 2^-(m/2+1) Gamma(s/2) / Gamma((s+m+1)/2);
    odd m reuses the odd-order walk.  The polynomial factor never enters,
    so the result is an independent check on poly_factor.
    """
    if n < 0 or m < 0:
        raise DomainError("requires n >= 0 and m >= 0")
    if m > n:
        return HPComplex(0, 0, precision_bits)
    workprec = precision_bits + _GUARD
    z = _require_right_half_plane(s, workprec)
    with mp.workprec(workprec):
        if m % 2 == 1:
            return _wrap(_odd_order_float(n, m, z, workprec), precision_bits)
        memo: Dict[Tuple[int, int], mp.mpc] = {}
        lead = double_factorial(2 * m - 1) * double_factorial(m - 1) \
            * mp.sqrt(mp.pi) / mp.power(2, m // 2 + 1)

        def seed(shift: int) -> mp.mpc:
            sv = z + shift
            return lead * mp.gamma(sv / 2) * mp.rgamma((sv + m + 1) / 2)

        def value(k: int, shift: int) -> mp.mpc:
            if (k, shift) in memo:
                return memo[(k, shift)]
            if k == m:
                out = seed(shift)
            elif k == m + 1:
                out = (2 * m + 1) * seed(shift + 1)
            else:
                out = ((2 * k - 1) * value(k - 1, shift + 1)
                       - (k + m - 1) * value(k - 2, shift)) / (k - m)
            memo[(k, shift)] = out
            return out

        return _wrap(value(n, 0), precision_bits)


def mellin_closed(n: int, m: int, s, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """M_n^m(s) by the closed route: exact polynomial factor for even m,
    degree recursion for odd m; exact 0 for m > n."""
    if n < 0 or m < 0:
        raise DomainError("mellin_closed requires n >= 0 and m >= 0")
    workprec = precision_bits + _GUARD
    _require_right_half_plane(s, workprec)
    if m > n:
        return HPComplex(0, 0, precision_bits)
    if m % 2 == 0:
        return poly_factor(n, m).evaluate(s, precision_bits)
    rational = s if isinstance(s, (int, Fraction)) else None
    if isinstance(s, str):
        rational = as_rational(s)
    if rational is not None:
        exact = _odd_order_exact(n, m, as_rational(rational))
        with mp.workprec(workprec):
            return _wrap(mp.mpf(exact.numerator) / exact.denominator, precision_bits)
    with mp.workprec(workprec):
        z = _to_mpc(s, workprec)
        return _wrap(_odd_order_float(n, m, z, workprec), precision_bits)


def mellin_odd_order_exact(n: int, m: int, s) -> Fraction:
    """Exact rational M_n^m(s) for odd m and rational s > 0."""
    if m % 2 != 1:
        raise DomainError("exact rational route exists for odd m only")
    if m > n:
        return Fraction(0)
    sq = as_rational(s)
    if sq <= 0:
        raise DomainError("transform defined for s > 0")
    return _odd_order_exact(n, m, sq)


def special_value_at_1(n: int, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """M_n(1) for even n: pi times an explicit rational.

    The published formula gives 0 at odd n while M_1(1) = 1, so odd n is
    refused rather than exposed wrong.
    """
    if n < 0 or n % 2 != 0:
        raise DomainError("special value formula is valid for even n only")
    coeff = special_value_at_1_rational(n)
    with mp.workprec(precision_bits + _GUARD):
        value = mp.pi * mp.mpf(coeff.numerator) / coeff.denominator
    return _wrap(value, precision_bits)


def special_value_at_1_rational(n: int) -> Fraction:
    """The rational r with M_n(1) = r * pi, n even.

    (-1)^n pi^2 / (2 Gamma((1-n)/2)^2 Gamma(n/2+1)^2) with
    Gamma(1/2 - k) = (-4)^k k! sqrt(pi) / (2k)! made explicit.
    """
    if n < 0 or n % 2 != 0:
        raise DomainError("special value formula is valid for even n only")
    k = n // 2
    return Fraction(factorial(2 * k) ** 2, 2 * 16 ** k * factorial(k) ** 4)


# ---------------------------------------------------------------------------
# direct quadrature oracle

@dataclass(frozen=True)
class MellinQuadratureResult:
    value: HPComplex
    error_estimate: mp.mpf
    levels_used: int


def mellin_quadrature(
    n: int,
    m: int,
    s,
    precision_bits: int = DEFAULT_PRECISION,
    tolerance=None,
    min_level: int = 3,
) -> MellinQuadratureResult:
    """Tanh-sinh quadrature of the defining integral in the theta variable,
    int_0^{pi/2} cos^{s-1}(theta) P_n^m(cos theta) d(theta); the square-root
    endpoint factor of the x form is absorbed by the substitution."""
    workprec = precision_bits + _GUARD
    z = _require_right_half_plane(s, workprec)
    with mp.workprec(workprec):
        tol = mp.mpf(tolerance) if tolerance is not None else mp.mpf(2) ** (-(precision_bits // 2))

        def integrand(theta, dist_a, dist_b):
            # cos theta = sin(pi/2 - theta); dist_b is exact near the endpoint
            c = mp.sin(dist_b)
            return mp.power(c, z - 1) * ferrers(n, m, c)

        result = tanh_sinh(integrand, 0, mp.pi / 2, precision_bits,
                           tolerance=tol, min_level=min_level)
        value = _wrap(result.value, precision_bits)
    return MellinQuadratureResult(value, result.error_estimate, result.levels_used)


# ---------------------------------------------------------------------------
# the representation catalog

class RepVariant(Enum):
    L2A = "L2a"
    L2B = "L2b"
    L2C = "L2c"
    L2D = "L2d"
    L2E = "L2e"
    L3A = "L3a"
    L3B = "L3b"
    L3C = "L3c"
    P1 = "P1"
    P3 = "P3"
    L8 = "L8"
    COS_QUAD = "COS_QUAD"
    TANH_QUAD = "TANH_QUAD"
    GENFUN = "GENFUN"


_ANALYTIC_VARIANTS = frozenset({
    RepVariant.L2A, RepVariant.L2B, RepVariant.L2C, RepVariant.L2D,
    RepVariant.L2E, RepVariant.L3A, RepVariant.L3B, RepVariant.L3C,
    RepVariant.P3, RepVariant.L8,
})
_QUADRATURE_VARIANTS = frozenset({
    RepVariant.P1, RepVariant.COS_QUAD, RepVariant.TANH_QUAD,
})


def variant_is_quadrature(variant: RepVariant) -> bool:
    return variant in _QUADRATURE_VARIANTS


def _require_order_zero(variant: RepVariant, m: int) -> None:
    if m != 0:
        raise DomainError(f"{variant.value} represents the m = 0 transform only")


def _frac(a, b=1) -> Fraction:
    return Fraction(a, b)


def mellin_rep(
    variant: RepVariant,
    n: int,
    m: int,
    s,
    precision_bits: int = DEFAULT_PRECISION,
) -> HPComplex:
    """One alternative representation of M_n^m(s).

    Analytic variants go through the hypergeometric engine or finite gamma
    sums; quadrature variants integrate.  L2e keeps its catalogued
    coefficients; for even n >= 2 it returns a value that disagrees with
    mellin_closed (first mismatch at n = 2, s = 3: -21 pi/256 against the
    true 5 pi/32), and callers comparing representations will see that.
    """
    if n < 0 or m < 0:
        raise DomainError("mellin_rep requires n >= 0 and m >= 0")
    if variant is RepVariant.GENFUN:
        raise DomainError("the generating function is exposed by genfun(), "
                          "not as a pointwise representation")
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        z = _to_mpc(s, workprec)
        odd_domain = variant in (RepVariant.L2A, RepVariant.L2D) and n % 2 == 1
        if odd_domain:
            if not z.real > -1:
                raise DomainError("odd-degree series representations need Re s > -1")
        else:
            _require_right_half_plane(s, workprec)

        if variant is RepVariant.L2A:
            _require_order_zero(variant, m)
            if n % 2 != 1:
                raise DomainError("L2a decomposes odd n = 2N+1")
            N = (n - 1) // 2
            sq = _as_param(s)
            pref = _half_pochhammer_ratio(sq, N, odd=True, workprec=workprec)
            f = hyp_pfq(HypergeometricSpec(
                (_frac(1, 2), _shift(sq, 1) / 2, _div2(sq)),
                (_div2(sq) - N, _div2(sq) + _frac(2 * N + 3, 2)), 1), precision_bits + 8)
            value = pref * f.to_mpc()
        elif variant is RepVariant.L2B:
            _require_order_zero(variant, m)
            if n % 2 != 0:
                raise DomainError("L2b decomposes even n = 2N")
            N = n // 2
            sq = _as_param(s)
            pref = _half_pochhammer_ratio(sq, N, odd=False, workprec=workprec)
            f = hyp_pfq(HypergeometricSpec(
                (_frac(1, 2), _shift(sq, 1) / 2, _div2(sq)),
                (_div2(sq) - N + _frac(1, 2), _div2(sq) + N + 1), 1), precision_bits + 8)
            value = pref * f.to_mpc()
        elif variant is RepVariant.L2C:
            _require_order_zero(variant, m)
            if n % 2 != 0:
                raise DomainError("L2c decomposes even n = 2N")
            N = n // 2
            sq = _as_param(s)
            pref = ((-1) ** N * mp.mpf(double_factorial(2 * N - 1))
                    / (mp.power(2, N + 1) * mp.factorial(N))
                    * mp.sqrt(mp.pi) * mp.gamma(z / 2) * mp.rgamma((z + 1) / 2))
            f = hyp_pfq(HypergeometricSpec(
                (-N, N + _frac(1, 2), _div2(sq)),
                (_frac(1, 2), _shift(sq, 1) / 2), 1), precision_bits + 8)
            value = pref * f.to_mpc()
        elif variant is RepVariant.L2D:
            _require_order_zero(variant, m)
            if n % 2 != 1:
                raise DomainError("L2d decomposes odd n = 2N+1")
            N = (n - 1) // 2
            sq = _as_param(s)
            pref = ((-1) ** N * mp.mpf(double_factorial(2 * N + 1))
                    / (mp.power(2, N) * mp.factorial(N))
                    * mp.sqrt(mp.pi) * mp.gamma((z + 1) / 2) * mp.rgamma(z / 2) / z)
            f = hyp_pfq(HypergeometricSpec(
                (-N, N + _frac(3, 2), _shift(sq, 1) / 2),
                (_frac(3, 2), _div2(sq) + 1), 1), precision_bits + 8)
            value = pref * f.to_mpc()
        elif variant is RepVariant.L2E:
            _require_order_zero(variant, m)
            if n % 2 != 0:
                raise DomainError("L2e's reciprocal gamma factor vanishes "
                                  "identically for odd n; refused")
            sq = _as_param(s)
            pref = ((-1) ** n * mp.mpf(double_factorial(2 * n - 1))
                    / (mp.power(2, n + 1) * mp.factorial(n))
                    * mp.pi * mp.gamma((z - n) / 2)
                    * mp.rgamma(mp.mpf(1 - n) / 2) * mp.rgamma((z - n + 1) / 2))
            f = hyp_pfq(HypergeometricSpec(
                (-n, _frac(1, 2), (_shift(sq, -n)) / 2),
                (_frac(1 - n, 2), _shift(sq, 1 - n) / 2), 1), precision_bits + 8)
            value = pref * f.to_mpc()
        elif variant is RepVariant.L3A:
            _require_order_zero(variant, m)
            total = mp.mpc(0)
            for k in range(n // 2 + 1):
                coeff = (-1) ** k * mp.mpf(mp.factorial(2 * n - 2 * k)) / (
                    mp.factorial(k) * mp.factorial(n - k) * mp.factorial(n - 2 * k))
                total += coeff * mp.beta((z + n) / 2 - k, mp.mpf(1) / 2)
            value = total / mp.power(2, n + 1)
        elif variant is RepVariant.L3B:
            _require_order_zero(variant, m)
            sq = _as_param(s)
            pref = (mp.power(2, n - 1) * mp.gamma(n + mp.mpf(1) / 2)
                    * mp.gamma((n + z) / 2)
                    / (mp.factorial(n) * mp.gamma((n + z + 1) / 2)))
            f = hyp_pfq(HypergeometricSpec(
                (_frac(1 - n, 2), _frac(-n, 2), (_shift(-sq, 1 - n)) / 2),
                (_frac(1 - 2 * n, 2), 1 - _shift(sq, n) / 2), 1), precision_bits + 8)
            value = pref * f.to_mpc()
        elif variant is RepVariant.L3C:
            _require_order_zero(variant, m)
            sq = _as_param(s)
            pref = (mp.sqrt(mp.pi) / 2 * mp.gamma((n + z) / 2)
                    * mp.rgamma((n + z + 1) / 2))
            f = hyp_pfq(HypergeometricSpec(
                (_frac(1 - n, 2), _frac(-n, 2), _frac(1, 2)),
                (1, 1 - _shift(sq, n) / 2), 1), precision_bits + 8)
            value = pref * f.to_mpc()
        elif variant is RepVariant.P1:
            _require_order_zero(variant, m)
            sq = _as_param(s)
            pref = (mp.rgamma(mp.mpf(1) / 2) * mp.gamma((n + z) / 2)
                    * mp.rgamma((n + z + 1) / 2))

            def integrand(phi, dist_a, dist_b):
                # the 2F1 terminates for every n, so argument 1 is harmless
                inner = hyp_pfq(HypergeometricSpec(
                    (_frac(1 - n, 2), _frac(-n, 2)),
                    (1 - _shift(sq, n) / 2,), mp.cos(phi) ** 2),
                    precision_bits)
                return inner.to_mpc()

            quad = tanh_sinh(integrand, 0, mp.pi / 2, precision_bits,
                             tolerance=mp.mpf(2) ** (-(precision_bits // 2 + 8)))
            value = pref * quad.value
        elif variant is RepVariant.P3:
            _require_order_zero(variant, m)
            total = mp.mpc(0)
            for k in range(n + 1):
                coeff = mp.mpf((-1) ** k) / (
                    mp.factorial(k) ** 2 * mp.factorial(n - k) ** 2)
                g = mp.gamma(k + mp.mpf(1) / 2) * mp.rgamma(k + z + mp.mpf(1) / 2)
                f = hyp_pfq(HypergeometricSpec(
                    (_frac(1, 2) + k - n, _as_param(s)),
                    (_frac(1, 2) + k + _as_param(s),), -1), precision_bits + 8)
                total += coeff * g * f.to_mpc()
            value = (mp.factorial(n) ** 2 / mp.power(2, n)) * mp.gamma(z) * total
        elif variant is RepVariant.L8:
            if m > n:
                raise DomainError("L8 requires m <= n")
            total = mp.mpc(0)
            for ell in range(m, n + 1):
                if (ell - m) % 2 != 0:
                    continue
                sign = (-1) ** ((m + ell) // 2)
                coeff = (sign * mp.mpf(comb(n, ell)) * comb(ell, (ell - m) // 2)
                         / mp.power(2, ell + 1))
                total += coeff * mp.beta((n + z - ell) / 2, mp.mpf(ell + 1) / 2)
            rising = mp.mpf(1)
            for j in range(m):
                rising *= n + 1 + j
            value = rising * total
        elif variant is RepVariant.COS_QUAD:
            if m > n:
                raise DomainError("quadrature representation needs m <= n")
            return mellin_quadrature(n, m, s, precision_bits).value
        elif variant is RepVariant.TANH_QUAD:
            if m > n:
                raise DomainError("quadrature representation needs m <= n")

            def integrand(v, dist_a, dist_b):
                # x = (1-v^2)/(1+v^2); near v = 1 use 1 - v = dist_b exactly
                denom = 1 + v * v
                x = dist_b * (1 + v) / denom
                return 2 * mp.power(x, z - 1) * ferrers(n, m, x) / denom

            quad = tanh_sinh(integrand, 0, 1, precision_bits,
                             tolerance=mp.mpf(2) ** (-(precision_bits // 2 + 8)))
            value = quad.value
        else:  # pragma: no cover - enum is closed
            raise DomainError(f"unknown variant {variant}")
    return _wrap(value, precision_bits)


def _as_param(s):
    """Prefer exact parameters so terminating series stay exact."""
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        return as_rational(s)
    if isinstance(s, GaussianRational):
        return s
    if isinstance(s, HPComplex):
        return s.to_mpc()
    return s


def _shift(param, k: int):
    if isinstance(param, (Fraction, GaussianRational)):
        return param + k
    return mp.mpc(param) + k


def _div2(param):
    if isinstance(param, (Fraction, GaussianRational)):
        return param / 2
    return mp.mpc(param) / 2


def _half_pochhammer_ratio(sq, N: int, odd: bool, workprec: int) -> mp.mpc:
    """((2-s)/2)_N / ((s+1)/2)_{N+1} for odd n, ((1-s)/2)_N / (s/2)_{N+1}
    for even n, times (-1)^N/2."""
    z = _to_mpc(sq, workprec)
    if odd:
        top, bottom = (2 - z) / 2, (z + 1) / 2
    else:
        top, bottom = (1 - z) / 2, z / 2
    num = mp.mpc(1)
    for j in range(N):
        num *= top + j
    den = mp.mpc(1)
    for j in range(N + 1):
        den *= bottom + j
    return (-1) ** N * num / (2 * den)


# ---------------------------------------------------------------------------
# generating function

@dataclass(frozen=True)
class GenfunComparison:
    partial_sum: HPComplex
    closed_form: HPComplex
    tail_bound: mp.mpf
    closed_even: HPComplex
    closed_odd: HPComplex
    partial_even: HPComplex
    partial_odd: HPComplex


def genfun(t, s, N: int, precision_bits: int = DEFAULT_PRECISION) -> GenfunComparison:
    """Partial sum sum_{k<=N} M_k(s) t^k against the two-line closed form.

    The closed form's second line carries a 1/s factor; without it the odd
    line disagrees with the partial sums by exactly a factor s.  The tail
    bound C|t|^{N+1} uses |M_k(s)| <= 1/Re(s), valid since |P_k| <= 1.
    """
    if N < 0:
        raise DomainError("partial sum needs N >= 0")
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        tv = _to_mpc(t, workprec)
        z = _require_right_half_plane(s, workprec)
        if not abs(tv) < 1:
            raise DomainError("generating series requires |t| < 1")

        even = mp.mpc(0)
        odd = mp.mpc(0)
        for k in range(N + 1):
            term = mellin_closed(k, 0, _as_param(s), precision_bits + 16).to_mpc() * tv ** k
            if k % 2 == 0:
                even += term
            else:
                odd += term

        zz = 4 * tv * tv / (1 + tv * tv) ** 2
        shared = mp.sqrt(mp.pi) / mp.sqrt(1 + tv * tv)
        line1 = shared * mp.gamma(z / 2) / (2 * mp.gamma((z + 1) / 2)) * hyp_pfq(
            HypergeometricSpec((_frac(1, 4), _frac(3, 4), _div2(_as_param(s))),
                               (_frac(1, 2), _shift(_as_param(s), 1) / 2), zz),
            precision_bits + 8).to_mpc()
        line2 = shared * (tv / (1 + tv * tv)) * mp.gamma((z + 1) / 2) / (
            z * mp.gamma(z / 2)) * hyp_pfq(
            HypergeometricSpec((_frac(3, 4), _frac(5, 4), _shift(_as_param(s), 1) / 2),
                               (_frac(3, 2), _div2(_as_param(s)) + 1), zz),
            precision_bits + 8).to_mpc()

        tail = abs(tv) ** (N + 1) / ((1 - abs(tv)) * z.real)
        return GenfunComparison(
            partial_sum=_wrap(even + odd, precision_bits),
            closed_form=_wrap(line1 + line2, precision_bits),
            tail_bound=mp.mpf(tail),
            closed_even=_wrap(line1, precision_bits),
            closed_odd=_wrap(line2, precision_bits),
            partial_even=_wrap(even, precision_bits),
            partial_odd=_wrap(odd, precision_bits),
        )


# ---------------------------------------------------------------------------
# order-1 rational structure

def order_one_reference(n: int, s, precision_bits: int = DEFAULT_PRECISION,
                        duplication_form: bool = False) -> HPComplex:
    """M_n^1(s) as the gamma-ratio-minus-one expression; the alternative
    flag routes through sqrt(pi) 2^(1-s) Gamma(s) instead (the two agree by
    Legendre duplication)."""
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        z = _require_right_half_plane(s, workprec)
        if duplication_form:
            top = mp.sqrt(mp.pi) * mp.power(2, 1 - z) * mp.gamma(z)
        else:
            top = mp.gamma(z / 2) * mp.gamma((z + 1) / 2)
        value = top * mp.rgamma((z - n) / 2) * mp.rgamma((z + n + 1) / 2) - 1
    return _wrap(value, precision_bits)


def order_one_exact(n: int, s) -> Fraction:
    """Exact rational M_n^1(s): pochhammer ratio minus one."""
    sq = as_rational(s)
    if sq <= 0:
        raise DomainError("defined for s > 0")
    if n % 2 == 0:
        k = n // 2
        num = pochhammer_rational((sq - n) / 2, k)
        den = pochhammer_rational((sq + 1) / 2, k)
    else:
        k = (n + 1) // 2
        num = pochhammer_rational((sq - n) / 2, k)
        den = pochhammer_rational(sq / 2, k)
    return num / den - 1


def order_one_rationality_check(n: int) -> bool:
    """Certify that M_n^1 is a rational function of s: exact
    Lagrange interpolation of the numerator at deg+1 integer points, then
    verification at 10 further points, all over Fractions."""
    deg = n // 2 if n % 2 == 0 else (n + 1) // 2

    def denominator(sq: Fraction) -> Fraction:
        if n % 2 == 0:
            return pochhammer_rational((sq + 1) / 2, n // 2)
        return pochhammer_rational(sq / 2, (n + 1) // 2)

    xs = [Fraction(i) for i in range(1, deg + 2)]
    ys = [(mellin_odd_order_exact(n, 1, x) + 1) * denominator(x) for x in xs]

    def interpolate(x: Fraction) -> Fraction:
        total = Fraction(0)
        for i, xi in enumerate(xs):
            li = Fraction(1)
            for j, xj in enumerate(xs):
                if i != j:
                    li *= (x - xj) / (xi - xj)
            total += ys[i] * li
        return total

    for i in range(10):
        probe = Fraction(2 * i + 3, 2)
        expected = (mellin_odd_order_exact(n, 1, probe) + 1) * denominator(probe)
        if interpolate(probe) != expected:
            return False
    return True
