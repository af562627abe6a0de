"""Gamma family, zeta family, Ferrers functions, and a generalized
hypergeometric engine with the A1-A3 transformation catalog and the
Kummer-family argument -1 identities.

Gamma and zeta evaluation is backed by mpmath (Stirling-family gamma,
Euler-Maclaurin zeta with exact Bernoulli caching); this module owns the
pole/termination semantics, the exact terminating path over Gaussian
rationals, and the unit-argument strategy selection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import mpmath as mp

from .errors import DivergenceError, DomainError, PoleError
from .mpcore import (
    DEFAULT_PRECISION,
    GaussianRational,
    HPComplex,
    as_rational,
    rational_to_mpf,
)

_GUARD = 24


def _to_mpc(value, precision_bits: int) -> mp.mpc:
    if isinstance(value, HPComplex):
        return value.to_mpc()
    if isinstance(value, GaussianRational):
        return value.to_mpc(precision_bits)
    with mp.workprec(precision_bits):
        if isinstance(value, Fraction):
            return mp.mpc(rational_to_mpf(value, precision_bits))
        return mp.mpc(value)


def _wrap(value, precision_bits: int) -> HPComplex:
    # conversion must not round at the ambient context precision
    with mp.workprec(precision_bits + _GUARD):
        value = mp.mpc(value)
    return HPComplex(value.real, value.imag, precision_bits)


def _exact_rational_or_none(value) -> Optional[GaussianRational]:
    """Exact Gaussian-rational reading of value, or None for floats."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    if isinstance(value, float) and value == int(value):
        return GaussianRational(int(value))
    return None


def is_nonpositive_integer(value) -> bool:
    """Exact check; floats qualify only when they carry an exact integer."""
    g = _exact_rational_or_none(value)
    if g is not None:
        return g.im == 0 and g.re.denominator == 1 and g.re <= 0
    z = _to_mpc(value, DEFAULT_PRECISION)
    return z.imag == 0 and mp.isint(z.real) and z.real <= 0


# ---------------------------------------------------------------------------
# gamma family

def gamma(z, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """Gamma with an explicit pole error at nonpositive integers.

    Relative error is a few ulp at the requested precision; the reciprocal
    variant below is total and is the one to use when a vanishing 1/Gamma
    prefactor must select terms exactly.
    """
    if is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at {z}")
    with mp.workprec(precision_bits + _GUARD):
        value = mp.gamma(_to_mpc(z, precision_bits + _GUARD))
    return _wrap(value, precision_bits)


def reciprocal_gamma(z, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    if is_nonpositive_integer(z):
        return HPComplex(0, 0, precision_bits)
    with mp.workprec(precision_bits + _GUARD):
        value = mp.rgamma(_to_mpc(z, precision_bits + _GUARD))
    return _wrap(value, precision_bits)


# ---------------------------------------------------------------------------
# zeta family

class ZetaKind(enum.Enum):
    RIEMANN = "riemann"
    HURWITZ = "hurwitz"
    POLYGAMMA = "polygamma"


@dataclass(frozen=True)
class ZetaRequest:
    kind: ZetaKind
    s_or_order: object
    shift: object = None


def zeta_family(req: ZetaRequest, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    with mp.workprec(precision_bits + _GUARD):
        if req.kind is ZetaKind.RIEMANN:
            s = _to_mpc(req.s_or_order, precision_bits + _GUARD)
            if s == 1:
                raise PoleError("zeta pole at s = 1")
            value = mp.zeta(s)
        elif req.kind is ZetaKind.HURWITZ:
            s = _to_mpc(req.s_or_order, precision_bits + _GUARD)
            a = _to_mpc(req.shift, precision_bits + _GUARD)
            if a.real <= 0:
                raise DomainError(f"Hurwitz shift must have Re > 0, got {a}")
            if s == 1:
                raise PoleError("Hurwitz zeta pole at s = 1")
            value = mp.zeta(s, a)
        elif req.kind is ZetaKind.POLYGAMMA:
            order = req.s_or_order
            if not isinstance(order, int) or order < 0:
                raise DomainError(f"polygamma order must be a nonnegative integer, got {order}")
            z = _to_mpc(req.shift, precision_bits + _GUARD)
            if is_nonpositive_integer(z):
                raise PoleError(f"polygamma pole at {z}")
            value = mp.polygamma(order, z)
        else:  # pragma: no cover - enum is closed
            raise DomainError(f"unknown zeta request kind {req.kind}")
    return _wrap(value, precision_bits)


def riemann_zeta(s, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    return zeta_family(ZetaRequest(ZetaKind.RIEMANN, s), precision_bits)


def hurwitz_zeta(s, a, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    return zeta_family(ZetaRequest(ZetaKind.HURWITZ, s, a), precision_bits)


def polygamma(order: int, z, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    return zeta_family(ZetaRequest(ZetaKind.POLYGAMMA, order, z), precision_bits)


# ---------------------------------------------------------------------------
# Ferrers (associated Legendre on (-1, 1)), with Condon-Shortley phase

def ferrers(n: int, m: int, x) -> mp.mpf:
    """P_n^m(x) for -1 <= x <= 1 by upward three-term recurrence in degree.

    m = 0 is the ordinary Legendre polynomial.  Stable at the working
    precision; mpmath's legenp is not reliable on this interval.
    """
    if m < 0 or n < 0:
        raise DomainError("ferrers requires n >= 0 and m >= 0")
    if m > n:
        return mp.mpf(0)
    x = mp.mpf(x) if not isinstance(x, (mp.mpf, mp.mpc)) else x
    pmm = mp.mpf(1)
    if m > 0:
        somx2 = mp.sqrt((1 - x) * (1 + x))
        fact = mp.mpf(1)
        for _ in range(m):
            pmm *= -fact * somx2
            fact += 2
    if n == m:
        return pmm
    pmmp1 = x * (2 * m + 1) * pmm
    if n == m + 1:
        return pmmp1
    for ll in range(m + 2, n + 1):
        pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m)
        pmm, pmmp1 = pmmp1, pll
    return pmmp1


def double_factorial(k: int) -> int:
    """k!! with the usual empty-product conventions (-1)!! = 0!! = 1."""
    if k < -1:
        raise DomainError(f"double factorial undefined for {k}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def pochhammer_rational(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    a = as_rational(a)
    for i in range(k):
        out *= a + i
    return out


# ---------------------------------------------------------------------------
# generalized hypergeometric engine

@dataclass(frozen=True)
class HypergeometricSpec:
    """A pFq evaluation request.

    Parameters may be exact (int, Fraction, GaussianRational) or floating
    (HPComplex, mpf, mpc, float).  Exactness is what enables the exact
    terminating path and the precise pole/termination ordering checks.
    """

    numerator_params: tuple
    denominator_params: tuple
    argument: object

    def __init__(self, numerator_params: Sequence, denominator_params: Sequence, argument):
        object.__setattr__(self, "numerator_params", tuple(numerator_params))
        object.__setattr__(self, "denominator_params", tuple(denominator_params))
        object.__setattr__(self, "argument", argument)

    @property
    def termination_index(self) -> Optional[int]:
        """Last retained series index when a numerator parameter is a
        nonpositive integer; None for non-terminating series."""
        best = None
        for p in self.numerator_params:
            if is_nonpositive_integer(p):
                g = _exact_rational_or_none(p)
                k = int(-g.re) if g is not None else int(-_to_mpc(p, 64).real)
                best = k if best is None else min(best, k)
        return best


def _termination_of(params) -> Optional[int]:
    best = None
    for p in params:
        if is_nonpositive_integer(p):
            g = _exact_rational_or_none(p)
            k = int(-g.re) if g is not None else int(-_to_mpc(p, 64).real)
            best = k if best is None else min(best, k)
    return best


def _check_denominator_poles(spec: HypergeometricSpec) -> None:
    n_term = spec.termination_index
    for d in spec.denominator_params:
        if is_nonpositive_integer(d):
            g = _exact_rational_or_none(d)
            pole_at = int(-g.re) + 1 if g is not None else int(-_to_mpc(d, 64).real) + 1
            if n_term is None or n_term >= pole_at:
                raise PoleError(
                    f"denominator parameter {d} terminates before the numerator"
                )


def _all_exact(spec: HypergeometricSpec) -> Optional[tuple]:
    nums, dens = [], []
    for p in spec.numerator_params:
        g = _exact_rational_or_none(p)
        if g is None:
            return None
        nums.append(g)
    for p in spec.denominator_params:
        g = _exact_rational_or_none(p)
        if g is None:
            return None
        dens.append(g)
    z = _exact_rational_or_none(spec.argument)
    if z is None:
        return None
    return tuple(nums), tuple(dens), z


def hyp_terminating_exact(spec: HypergeometricSpec) -> GaussianRational:
    """Exact Gaussian-rational sum of a terminating series with exact inputs."""
    exact = _all_exact(spec)
    if exact is None:
        raise DomainError("exact path requires rational parameters and argument")
    n_term = spec.termination_index
    if n_term is None:
        raise DomainError("exact path requires a terminating series")
    _check_denominator_poles(spec)
    nums, dens, z = exact
    total = GaussianRational(0)
    term = GaussianRational(1)
    for k in range(n_term + 1):
        total = total + term
        factor = GaussianRational(1)
        for a in nums:
            factor = factor * (a + k)
        for b in dens:
            factor = factor / (b + k)
        term = term * factor * z / (k + 1)
    return total


def _sum_finite(nums, dens, z, n_term: int, precision_bits: int) -> mp.mpc:
    total = mp.mpc(0)
    term = mp.mpc(1)
    for k in range(n_term + 1):
        total += term
        factor = mp.mpc(1)
        for a in nums:
            factor *= a + k
        for b in dens:
            factor /= b + k
        term = term * factor * z / (k + 1)
    return total


def _sum_inside_disk(nums, dens, z, precision_bits: int) -> mp.mpc:
    eps = mp.mpf(2) ** (-(precision_bits + 8))
    q = (1 + abs(z)) / 2
    total = mp.mpc(0)
    term = mp.mpc(1)
    budget = 2_000_000
    for k in range(budget):
        total += term
        factor = mp.mpc(1)
        for a in nums:
            factor *= a + k
        for b in dens:
            factor /= b + k
        step = factor * z / (k + 1)
        term = term * step
        if abs(step) <= q and abs(term) * q / (1 - q) < eps * (1 + abs(total)):
            return total
    raise DivergenceError("series inside the unit disk exhausted its term budget")


def _hyper_unit(nums, dens, precision_bits: int) -> mp.mpc:
    """Convergent pFq(1) via mpmath's summation engine."""
    try:
        with mp.workprec(precision_bits + 2 * _GUARD):
            return mp.mpc(mp.hyper([mp.mpc(a) for a in nums],
                                   [mp.mpc(b) for b in dens], 1))
    except mp.libmp.NoConvergence as exc:
        raise DivergenceError(f"unit-argument series did not converge: {exc}") from None


def _gamma_product(num_args, den_args, precision_bits: int):
    """prod Gamma(num) * prod 1/Gamma(den); returns exact 0 when a
    reciprocal factor vanishes, so callers can skip the attached series."""
    for d in den_args:
        if is_nonpositive_integer(d):
            return mp.mpc(0)
    value = mp.mpc(1)
    for n in num_args:
        if is_nonpositive_integer(n):
            raise PoleError(f"gamma pole at {n} in a prefactor")
        value *= mp.gamma(mp.mpc(n))
    for d in den_args:
        value *= mp.rgamma(mp.mpc(d))
    return value


def _excess(nums, dens) -> mp.mpf:
    return (mp.fsum(mp.mpc(b).real for b in dens)
            - mp.fsum(mp.mpc(a).real for a in nums))


def _a1_raised(nums, dens, precision_bits: int) -> Optional[mp.mpc]:
    """One A1 application on a 3F2(1), permuting parameters so both
    resulting series have excess Re(1+c-e) > 1/2; None when no labeling
    avoids prefactor poles."""
    candidates = []
    for ci in range(3):
        for ei in range(2):
            c, e = nums[ci], dens[ei]
            raised = 1 + (mp.mpc(c).real - mp.mpc(e).real)
            if raised > 0.5:
                candidates.append((raised, ci, ei))
    candidates.sort(key=lambda t: -t[0])
    for _, ci, ei in candidates:
        a, b = [nums[j] for j in range(3) if j != ci]
        c = nums[ci]
        d = dens[1 - ei]
        e = dens[ei]
        t1_num = (e - a - b, e)
        t1_den = (e - a, e - b)
        t2_num = (a + b - e, d, e, d + e - a - b - c)
        t2_den = (a, b, d - c, d + e - a - b)
        try:
            p1 = _gamma_product(t1_num, t1_den, precision_bits)
            p2 = _gamma_product(t2_num, t2_den, precision_bits)
        except PoleError:
            continue
        total = mp.mpc(0)
        if p1 != 0:
            total += p1 * _hyper_unit((a, b, d - c), (d, 1 + a + b - e), precision_bits)
        if p2 != 0:
            total += p2 * _hyper_unit((e - a, e - b, d + e - a - b - c),
                                      (1 + e - a - b, d + e - a - b), precision_bits)
        return total
    return None


def hyp_pfq(spec: HypergeometricSpec, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """Evaluate a pFq request.

    Strategy order: cancel matching parameters; terminating series (exact
    when inputs are exact); |z| < 1 direct with a geometric tail bound;
    z = -1 for 2F1 via Pfaff to argument 1/2; z = 1 by Gauss (2F1) or the
    unit-argument engine when the convergence excess allows, with a single
    A1 excess-raise attempted in the marginal band.  Anything else is an
    explicit DivergenceError, never a silent wrong answer.
    """
    nums = list(spec.numerator_params)
    dens = list(spec.denominator_params)

    # cancel identical numerator/denominator parameters (exact matches only)
    for a in list(nums):
        ga = _exact_rational_or_none(a)
        for b in list(dens):
            gb = _exact_rational_or_none(b)
            same = (ga is not None and gb is not None and ga == gb) or (
                ga is None and gb is None and a is b
            )
            if same:
                nums.remove(a)
                dens.remove(b)
                break
    spec = HypergeometricSpec(nums, dens, spec.argument)

    _check_denominator_poles(spec)
    n_term = spec.termination_index

    with mp.workprec(precision_bits + _GUARD):
        z = _to_mpc(spec.argument, precision_bits + _GUARD)

        if any(is_nonpositive_integer(p) and _exact_rational_or_none(p) == GaussianRational(0)
               for p in spec.numerator_params):
            return HPComplex(1, 0, precision_bits)

        if n_term is not None:
            exact = _all_exact(spec)
            if exact is not None:
                return hyp_terminating_exact(spec).to_hpcomplex(precision_bits)
            fnums = [_to_mpc(p, precision_bits + _GUARD) for p in spec.numerator_params]
            fdens = [_to_mpc(p, precision_bits + _GUARD) for p in spec.denominator_params]
            return _wrap(_sum_finite(fnums, fdens, z, n_term, precision_bits), precision_bits)

        fnums = [_to_mpc(p, precision_bits + _GUARD) for p in spec.numerator_params]
        fdens = [_to_mpc(p, precision_bits + _GUARD) for p in spec.denominator_params]

        if abs(z) < 1:
            if len(fnums) == 2 and len(fdens) == 1 and z == -1:
                pass  # unreachable: |−1| = 1
            return _wrap(_sum_inside_disk(fnums, fdens, z, precision_bits), precision_bits)

        if z == -1 and len(fnums) == 2 and len(fdens) == 1:
            # Pfaff: F(a,b;c;-1) = 2^(-a) F(a, c-b; c; 1/2)
            a, b = fnums
            c = fdens[0]
            inner = _sum_inside_disk((a, c - b), (c,), mp.mpf("0.5"), precision_bits)
            return _wrap(mp.power(2, -a) * inner, precision_bits)

        if z == 1:
            excess = _excess(fnums, fdens)
            if excess <= 0:
                raise DivergenceError(
                    f"pFq(1) with convergence excess {mp.nstr(excess, 6)} diverges"
                )
            if len(fnums) == 2 and len(fdens) == 1:
                a, b = fnums
                c = fdens[0]
                pref = _gamma_product((c, c - a - b), (c - a, c - b), precision_bits)
                return _wrap(pref, precision_bits)
            if len(fnums) == 3 and len(fdens) == 2 and excess <= 0.5:
                raised = _a1_raised(tuple(fnums), tuple(fdens), precision_bits)
                if raised is not None:
                    return _wrap(raised, precision_bits)
            return _wrap(_hyper_unit(fnums, fdens, precision_bits), precision_bits)

    raise DivergenceError(f"no evaluation strategy for argument {spec.argument}")


def hyp2f1(a, b, c, z, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    return hyp_pfq(HypergeometricSpec((a, b), (c,), z), precision_bits)


def hyp3f2(a1, a2, a3, b1, b2, z, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    return hyp_pfq(HypergeometricSpec((a1, a2, a3), (b1, b2), z), precision_bits)


# ---------------------------------------------------------------------------
# the A1-A3 transformation catalog

class TransformId(enum.Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"


def _f32(nums, dens, precision_bits) -> mp.mpc:
    n_term = _termination_of(nums)
    if n_term is not None:
        return _sum_finite(nums, dens, mp.mpf(1), n_term, precision_bits)
    if _excess(nums, dens) <= 0:
        raise DivergenceError("3F2(1) side series diverges")
    return _hyper_unit(nums, dens, precision_bits)


def threeF2_transform_check(
    transform: TransformId, a, b, c, d, e, precision_bits: int = DEFAULT_PRECISION
) -> HPComplex:
    """Evaluate both sides of one cataloged 3F2(1) transformation and
    return LHS - RHS.

    Both sides are computed independently; every denominator gamma goes
    through the reciprocal form, so a vanishing prefactor suppresses its
    series instead of producing a NaN.
    """
    with mp.workprec(precision_bits + 2 * _GUARD):
        az, bz, cz, dz, ez = (_to_mpc(x, precision_bits + 2 * _GUARD) for x in (a, b, c, d, e))
        lhs = _f32((az, bz, cz), (dz, ez), precision_bits)

        if transform is TransformId.A1:
            p1 = _gamma_product((ez - az - bz, ez), (ez - az, ez - bz), precision_bits)
            t1 = mp.mpc(0) if p1 == 0 else p1 * _f32(
                (az, bz, dz - cz), (dz, 1 + az + bz - ez), precision_bits)
            p2 = _gamma_product(
                (az + bz - ez, dz, ez, dz + ez - az - bz - cz),
                (az, bz, dz - cz, dz + ez - az - bz), precision_bits)
            # the second term carries a plus sign: both generic-tuple checks
            # and the standard two-term relation force it
            t2 = mp.mpc(0) if p2 == 0 else p2 * _f32(
                (ez - az, ez - bz, dz + ez - az - bz - cz),
                (1 + ez - az - bz, dz + ez - az - bz), precision_bits)
            rhs = t1 + t2
        elif transform is TransformId.A2:
            rhs = _shared_t1(az, bz, cz, dz, ez, precision_bits)
            p2 = _gamma_product((1 + az - dz, 1 + cz - dz),
                                (1 - dz, 1 + az + cz - dz), precision_bits)
            if p2 != 0:
                rhs += p2 * _f32((az, cz, ez - bz), (1 + az + cz - dz, ez), precision_bits)
        elif transform is TransformId.A3:
            rhs = _shared_t1(az, bz, cz, dz, ez, precision_bits)
            p2 = _gamma_product(
                (1 + az - dz, 1 + bz - dz, 1 + cz - dz, ez),
                (1 - dz, 1 + az + bz - dz, 1 + az + cz - dz, ez - az), precision_bits)
            if p2 != 0:
                rhs += p2 * _f32(
                    (az, 1 + az - dz, 1 + az + bz + cz - dz - ez),
                    (1 + az + bz - dz, 1 + az + cz - dz), precision_bits)
        else:  # pragma: no cover - enum is closed
            raise DomainError(f"unknown transform {transform}")

        residual = lhs - rhs
    return _wrap(residual, precision_bits)


def _shared_t1(az, bz, cz, dz, ez, precision_bits) -> mp.mpc:
    """First right-hand term shared by A2 and A3."""
    p1 = _gamma_product(
        (1 + az - dz, 1 + bz - dz, 1 + cz - dz, dz, ez),
        (az, bz, cz, 1 + ez - dz, 2 - dz), precision_bits)
    if p1 == 0:
        return mp.mpc(0)
    return p1 * _f32((1 + az - dz, 1 + bz - dz, 1 + cz - dz),
                     (1 + ez - dz, 2 - dz), precision_bits)


# ---------------------------------------------------------------------------
# Kummer family: 2F1 at argument -1 against gamma-ratio closed forms

def kummer_2f1_residual(which: str, s, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    """|LHS - RHS| material for the three argument -1 identities.

    which: 'a' (Kummer's own case), 'b' or 'c' (its two contiguous
    neighbours).  The left side goes through the Pfaff route of hyp_pfq;
    the right side is pure gamma arithmetic.
    """
    with mp.workprec(precision_bits + _GUARD):
        sz = _to_mpc(s, precision_bits + _GUARD)
        sqpi = mp.sqrt(mp.pi)
        if which == "a":
            lhs = hyp2f1(sz, mp.mpf("0.5"), sz + mp.mpf("0.5"), -1, precision_bits).to_mpc()
            rhs = sqpi * mp.power(2, -sz) * mp.gamma(sz + mp.mpf("0.5")) \
                * mp.rgamma((sz + 1) / 2) ** 2
        elif which == "b":
            lhs = hyp2f1(sz, mp.mpf("-0.5"), sz + mp.mpf("0.5"), -1, precision_bits).to_mpc()
            rhs = sqpi * mp.power(2, -sz) * mp.gamma(sz + mp.mpf("0.5")) * (
                mp.rgamma((sz + 1) / 2) ** 2 + (sz / 2) * mp.rgamma(sz / 2 + 1) ** 2
            )
        elif which == "c":
            lhs = hyp2f1(sz, mp.mpf("0.5"), sz + mp.mpf("1.5"), -1, precision_bits).to_mpc()
            rhs = -sqpi * mp.power(2, 1 - sz) * mp.gamma(sz + mp.mpf("1.5")) * (
                (2 / sz) * mp.rgamma(sz / 2) ** 2 - mp.rgamma((sz + 1) / 2) ** 2
            )
        else:
            raise DomainError(f"unknown identity tag {which!r}")
        residual = lhs - rhs
    return _wrap(residual, precision_bits)
