"""Critical-line certification: exact functional equations, certified zero
locations, difference-equation residuals, and the continuous-Hahn bridge.

The functional-equation sign deserves a note.  A real-coefficient polynomial
whose roots all sit on Re s = 1/2 satisfies p(1-s) = (-1)^(deg p) p(s), and
deg p_n^m = floor((n-m)/2).  The check below uses that exponent; for
m = 0 it coincides with floor(n/2), and p_4^2 = 45(2s-1) shows the two
disagree for m = 2 (mod 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath as mp

from .errors import ConvergenceError, DomainError
from .mellin import mellin_closed, poly_factor
from .mpcore import (
    DEFAULT_PRECISION,
    GaussianRational,
    HPComplex,
    RationalPolynomial,
    as_rational,
    poly_affine_substitute,
    poly_structural_equal,
)
from .specfun import HypergeometricSpec, hyp_pfq, hyp_terminating_exact

_GUARD = 64


# ---------------------------------------------------------------------------
# root finding

def _eval_with_derivative(coeffs, z):
    p = coeffs[-1]
    dp = mp.mpc(0)
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _monic_coeffs(p: RationalPolynomial, workprec: int) -> List[mp.mpc]:
    with mp.workprec(workprec):
        vals = [mp.mpf(c.numerator) / mp.mpf(c.denominator) for c in p.coefficients]
        return [mp.mpc(c / vals[-1]) for c in vals]


def find_roots(p: RationalPolynomial, precision_bits: int = DEFAULT_PRECISION) -> List[HPComplex]:
    """All roots of p by simultaneous Aberth iteration with per-root Newton
    polish.  Each returned root carries the certificate
    |p(root)/p'(root)| <= 2^(-prec/2), and pairwise separations exceed the
    certificate radii (roots are simple or we refuse)."""
    d = p.degree
    if p.is_zero:
        raise DomainError("the zero polynomial has no root set")
    if d == 0:
        return []
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        coeffs = _monic_coeffs(p, workprec)

        # Fujiwara bound, centered start on the symmetry axis
        bound = mp.mpf(0)
        for i in range(d):
            if coeffs[i] != 0:
                mag = abs(coeffs[i]) / (2 if i == 0 else 1)
                bound = max(bound, 2 * mag ** (mp.mpf(1) / (d - i)))
        radius = max(mp.mpf(1), bound)
        golden = (mp.sqrt(5) - 1) / 2
        centre = mp.mpc(mp.mpf(1) / 2, 0)
        z = [
            centre + radius * mp.exp(mp.mpc(0, 1) * 2 * mp.pi * (mp.mpf(j) / d + golden * j / (d + 1)))
            for j in range(d)
        ]

        tol = mp.mpf(2) ** (-(workprec - 16))
        budget = 60 + 12 * d
        for _ in range(budget):
            max_step = mp.mpf(0)
            for j in range(d):
                pv, dpv = _eval_with_derivative(coeffs, z[j])
                if pv == 0:
                    continue
                if dpv == 0:
                    z[j] += mp.mpf(1) / 997  # deterministic nudge off a stationary point
                    max_step = mp.inf
                    continue
                newton = pv / dpv
                s = mp.mpc(0)
                for k in range(d):
                    if k != j:
                        s += 1 / (z[j] - z[k])
                w = newton / (1 - newton * s)
                z[j] -= w
                max_step = max(max_step, abs(w))
            if max_step <= tol * (1 + radius):
                break
        else:
            raise ConvergenceError(
                f"Aberth iteration did not settle within {budget} sweeps for degree {d}"
            )

        # quadratic polish to the working-precision floor
        for j in range(d):
            for _ in range(64):
                pv, dpv = _eval_with_derivative(coeffs, z[j])
                if pv == 0 or dpv == 0:
                    break
                step = pv / dpv
                z[j] -= step
                if abs(step) <= (abs(z[j]) + 1) * mp.mpf(2) ** (-(workprec - 8)):
                    break

        certificate = mp.mpf(2) ** (-(precision_bits // 2))
        radii = []
        for j in range(d):
            pv, dpv = _eval_with_derivative(coeffs, z[j])
            if dpv == 0 or (pv != 0 and abs(pv / dpv) > certificate):
                raise ConvergenceError(
                    f"root {j} failed the Newton-residual certificate at {precision_bits} bits"
                )
            radii.append(d * abs(pv / dpv) if dpv != 0 else mp.mpf(0))
        for i in range(d):
            for j in range(i + 1, d):
                if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                    raise ConvergenceError(
                        "certificate disks overlap; multiple or clustered roots"
                    )

        z.sort(key=lambda r: (r.imag, r.real))
        return [HPComplex(r.real, r.imag, precision_bits) for r in z]


@dataclass(frozen=True)
class ZeroReport:
    n: int
    m: int
    roots: Tuple[HPComplex, ...]
    residuals: Tuple[mp.mpf, ...]  # Newton residuals |p(r)/p'(r)|, the certified quantity
    max_deviation: mp.mpf
    precision_bits: int
    shift_deviation: mp.mpf  # roots of p(s+1/2) against roots of p, shifted

    @property
    def certificate_tolerance(self) -> mp.mpf:
        return mp.mpf(2) ** (-(self.precision_bits // 2))


def critical_line_report(n: int, m: int = 0,
                         precision_bits: int = DEFAULT_PRECISION) -> ZeroReport:
    """Roots of the polynomial factor with their distance from Re s = 1/2,
    recomputed through the half-shifted polynomial as a cross-check."""
    closed = poly_factor(n, m)
    p = closed.poly
    if p.degree < 1:
        raise DomainError(f"(n, m) = ({n}, {m}) has a constant polynomial factor")
    roots = find_roots(p, precision_bits)
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        # Newton residual |p/p'|: invariant under coefficient scaling, so it
        # stays comparable across n even though the raw coefficients explode.
        residuals = []
        for r in roots:
            pv, dpv = _eval_with_derivative(
                [mp.mpc(c) for c in _monic_coeffs(p, workprec)], r.to_mpc()
            )
            residuals.append(abs(pv / dpv) if dpv != 0 else abs(pv))
        residuals = tuple(residuals)
        half = mp.mpf(1) / 2
        max_deviation = max(abs(r.to_mpc().real - half) for r in roots)
        shifted = poly_affine_substitute(p, Fraction(1), Fraction(1, 2))
        shifted_roots = find_roots(shifted, precision_bits)
        shift_deviation = max(
            abs(a.to_mpc() + half - b.to_mpc())
            for a, b in zip(shifted_roots, roots)
        )
    return ZeroReport(
        n=n, m=m, roots=tuple(roots), residuals=residuals,
        max_deviation=mp.mpf(max_deviation), precision_bits=precision_bits,
        shift_deviation=mp.mpf(shift_deviation),
    )


# ---------------------------------------------------------------------------
# functional equation (exact)

def functional_equation_sign(n: int, m: int = 0) -> int:
    """(-1)^deg: the reflection parity forced by roots on Re s = 1/2."""
    if m % 2 != 0 or m > n:
        raise DomainError("functional equation applies to even m <= n")
    return -1 if ((n - m) // 2) % 2 else 1


def functional_equation_check(n: int, m: int = 0) -> bool:
    """Exact coefficient-level test of p(1-s) = sign * p(s)."""
    p = poly_factor(n, m).poly
    reflected = poly_affine_substitute(p, Fraction(-1), Fraction(1))
    sign = functional_equation_sign(n, m)
    return poly_structural_equal(reflected, p.scale(Fraction(sign)))


# ---------------------------------------------------------------------------
# difference equation

def _coefficient_polys(n: int, m: int) -> Tuple[RationalPolynomial, ...]:
    A = RationalPolynomial([Fraction(n * n + n - 1 - m * m), Fraction(2), Fraction(-2)])
    B = RationalPolynomial([Fraction(-n * n - n), Fraction(1), Fraction(1)])
    C = RationalPolynomial([Fraction(2), Fraction(-3), Fraction(1)])
    return A, B, C


def difference_equation_terms(n: int, s, m: int = 0,
                              precision_bits: int = DEFAULT_PRECISION) -> Tuple[HPComplex, HPComplex, HPComplex]:
    """The three summands A(s)M(s), B(s)M(s+2), C(s)M(s-2); their maximum
    magnitude is the natural scale for the residual."""
    workprec = precision_bits + 16
    with mp.workprec(workprec + _GUARD):
        if isinstance(s, HPComplex):
            z = s.to_mpc()
        elif isinstance(s, (int, Fraction)) or isinstance(s, str):
            q = as_rational(s)
            z = mp.mpf(q.numerator) / q.denominator
        else:
            z = mp.mpc(s)
        if not z.real > 2:
            raise DomainError("all three transforms need Re s - 2 > 0")
        A, B, C = _coefficient_polys(n, m)
        exact = isinstance(s, (int, Fraction, str))
        if exact:
            q = as_rational(s)
            args = (q, q + 2, q - 2)
        else:
            args = (z, z + 2, z - 2)
        values = [mellin_closed(n, m, a, workprec) for a in args]
        out = []
        for coeff, val in zip((A, B, C), values):
            cv = coeff.eval_mpc(z, workprec)
            out.append(HPComplex.from_value(cv * val.to_mpc(), precision_bits))
    return tuple(out)


def difference_equation_residual(n: int, s, m: int = 0,
                                 precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    t1, t2, t3 = difference_equation_terms(n, s, m, precision_bits)
    return t1 + t2 + t3


def difference_equation_symbolic(n: int, m: int = 0) -> RationalPolynomial:
    """The exact polynomial-level identity after clearing the gamma shifts:
    returns A(s)(s+n+1)(s+eps-2)p(s) + B(s)(s+eps)(s+eps-2)p(s+2)
    + C(s)(s+n-1)(s+n+1)p(s-2), which must be the zero polynomial."""
    closed = poly_factor(n, m)
    p = closed.poly
    eps = n % 2
    A, B, C = _coefficient_polys(n, m)
    p_up = poly_affine_substitute(p, Fraction(1), Fraction(2))
    p_down = poly_affine_substitute(p, Fraction(1), Fraction(-2))
    term1 = (A * p).times_linear(Fraction(1), Fraction(n + 1)).times_linear(
        Fraction(1), Fraction(eps - 2))
    term2 = (B * p_up).times_linear(Fraction(1), Fraction(eps)).times_linear(
        Fraction(1), Fraction(eps - 2))
    term3 = (C * p_down).times_linear(Fraction(1), Fraction(n - 1)).times_linear(
        Fraction(1), Fraction(n + 1))
    return term1 + term2 + term3


# ---------------------------------------------------------------------------
# continuous Hahn bridge

@dataclass(frozen=True)
class HahnParams:
    a: object
    b: object
    c: object
    d: object


def _as_gaussian(value) -> Optional[GaussianRational]:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    if isinstance(value, str):
        return GaussianRational(as_rational(value))
    return None


def _any_to_mpc(value, workprec: int) -> mp.mpc:
    if isinstance(value, HPComplex):
        return value.to_mpc()
    g = _as_gaussian(value)
    if g is not None:
        return g.to_mpc(workprec)
    with mp.workprec(workprec):
        return mp.mpc(value)


def _pochhammer_gaussian(g: GaussianRational, k: int) -> GaussianRational:
    out = GaussianRational(1)
    for i in range(k):
        out = out * (g + i)
    return out


def hahn_eval_exact(n: int, x, params: HahnParams) -> GaussianRational:
    """p_n(x; a, b, c, d) = i^n (a+c)_n (a+d)_n / n! *
    3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1), summed exactly."""
    if n < 0:
        raise DomainError("hahn_eval requires n >= 0")
    ga, gb, gc, gd = (_as_gaussian(v) for v in (params.a, params.b, params.c, params.d))
    gx = _as_gaussian(x)
    if None in (ga, gb, gc, gd, gx):
        raise DomainError("exact evaluation needs Gaussian-rational inputs")
    i_unit = GaussianRational(0, 1)
    a_plus_ix = ga + i_unit * gx
    series = hyp_terminating_exact(HypergeometricSpec(
        (GaussianRational(-n), ga + gb + gc + gd + (n - 1), a_plus_ix),
        (ga + gc, ga + gd), GaussianRational(1)))
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    lead = GaussianRational.i_power(n) * _pochhammer_gaussian(ga + gc, n) \
        * _pochhammer_gaussian(ga + gd, n) / fact
    return lead * series


def hahn_eval(n: int, x, params: HahnParams,
              precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
    exactable = all(_as_gaussian(v) is not None
                    for v in (params.a, params.b, params.c, params.d)) \
        and _as_gaussian(x) is not None
    if exactable:
        return hahn_eval_exact(n, x, params).to_hpcomplex(precision_bits)
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        xa = _any_to_mpc(x, workprec)
        pa, pb, pc, pd = (_any_to_mpc(v, workprec)
                          for v in (params.a, params.b, params.c, params.d))
        series = hyp_pfq(HypergeometricSpec(
            (-n, pa + pb + pc + pd + (n - 1), pa + mp.mpc(0, 1) * xa),
            (pa + pc, pa + pd), 1), precision_bits + 8)
        lead = (mp.mpc(0, 1) ** n / mp.factorial(n)
                * mp.rf(pa + pc, n) * mp.rf(pa + pd, n))
        value = lead * series.to_mpc()
    return HPComplex.from_value(value, precision_bits)


def _bridge_params(n: int) -> HahnParams:
    return HahnParams(a=Fraction(-n), b=Fraction(0), c=Fraction(1, 2),
                      d=Fraction(1, 2) - n)


def _bridge_point(s) -> GaussianRational:
    """x = -i s / 2 for Gaussian-rational s."""
    g = _as_gaussian(s)
    if g is None:
        raise DomainError("exact bridge point needs a Gaussian-rational s")
    return GaussianRational(0, Fraction(-1, 2)) * g


def hahn_proportionality(n: int, samples: Sequence,
                         precision_bits: int = DEFAULT_PRECISION) -> mp.mpf:
    """Max spread of poly_factor(2n, 0)(s) / p_n(-is/2; -n, 0, 1/2, 1/2-n)
    over the samples.  Exact inputs give an exact (usually zero) spread."""
    if n < 1:
        raise DomainError("proportionality bridge needs n >= 1")
    if len(samples) < 2:
        raise DomainError("need at least two samples to measure a spread")
    p = poly_factor(2 * n, 0).poly
    params = _bridge_params(n)
    ratios = []
    exact_ok = all(_as_gaussian(x) is not None for x in samples)
    if exact_ok:
        for s in samples:
            g = _as_gaussian(s)
            denom = hahn_eval_exact(n, _bridge_point(g), params)
            if denom.is_zero:
                raise DomainError(f"sample {s} is a zero of the Hahn factor")
            ratios.append(p.eval_gaussian(g) / denom)
        with mp.workprec(precision_bits + _GUARD):
            return mp.mpf(max(abs((r - ratios[0]).to_mpc(precision_bits + _GUARD))
                              for r in ratios[1:]))
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        for s in samples:
            z = s.to_mpc() if isinstance(s, HPComplex) else mp.mpc(s)
            denom = hahn_eval(n, mp.mpc(0, -1) * z / 2, params, precision_bits + 16)
            dv = denom.to_mpc()
            if dv == 0:
                raise DomainError(f"sample {s} is a zero of the Hahn factor")
            ratios.append(p.eval_mpc(z, workprec) / dv)
        return mp.mpf(max(abs(r - ratios[0]) for r in ratios[1:]))


def hahn_constant(n: int) -> GaussianRational:
    """The measured proportionality constant at a generic sample; reported,
    never assumed."""
    if n < 1:
        raise DomainError("proportionality bridge needs n >= 1")
    p = poly_factor(2 * n, 0).poly
    params = _bridge_params(n)
    for candidate in (Fraction(2), Fraction(3), Fraction(5, 2)):
        denom = hahn_eval_exact(n, _bridge_point(candidate), params)
        if not denom.is_zero:
            return GaussianRational(p.eval_rational(candidate)) / denom
    raise DomainError("no generic sample found")  # pragma: no cover
