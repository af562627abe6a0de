"""Exact rationals, arbitrary-precision complex values, and dense
rational-coefficient polynomials in one variable.

``BigRational`` is ``fractions.Fraction``: always stored reduced, which is
exactly the invariant the recursions need to keep coefficient growth in
check.  ``HPComplex`` carries its precision in bits as data, not ambient
state; mixed-precision arithmetic resolves to the max of the operands.
``RationalPolynomial`` is dense and exact (degrees stay around 100 at the
scales this package targets, so sparsity never pays).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath as mp

from .errors import DomainError

BigRational = Fraction

DEFAULT_PRECISION = 256
MIN_PRECISION = 64

RationalLike = Union[int, Fraction]


def as_rational(x: RationalLike | str) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rational_to_mpf(x: Fraction | int, precision_bits: int) -> mp.mpf:
    x = as_rational(x)
    with mp.workprec(precision_bits):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)


def _to_mpf(value, precision_bits: int) -> mp.mpf:
    if isinstance(value, Fraction):
        return rational_to_mpf(value, precision_bits)
    with mp.workprec(precision_bits):
        return mp.mpf(value)


@dataclass(frozen=True)
class HPComplex:
    """A complex value plus the precision (in bits) it was computed at.

    Equality compares the numeric value only; precision is a carrier
    attribute.  Arithmetic between two HPComplex values runs at the max of
    the two precisions.
    """

    real: mp.mpf
    imag: mp.mpf
    precision_bits: int

    def __init__(self, real=0, imag=0, precision_bits: int = DEFAULT_PRECISION):
        if precision_bits < MIN_PRECISION:
            raise DomainError(f"precision_bits must be >= {MIN_PRECISION}, got {precision_bits}")
        object.__setattr__(self, "real", _to_mpf(real, precision_bits))
        object.__setattr__(self, "imag", _to_mpf(imag, precision_bits))
        object.__setattr__(self, "precision_bits", int(precision_bits))

    @classmethod
    def from_value(cls, value, precision_bits: int = DEFAULT_PRECISION) -> "HPComplex":
        if isinstance(value, HPComplex):
            return value
        if isinstance(value, (mp.mpc, complex)):
            return cls(value.real, value.imag, precision_bits)
        return cls(value, 0, precision_bits)

    def to_mpc(self) -> mp.mpc:
        # never rounds below the stored width, whatever the ambient context
        with mp.workprec(self.precision_bits):
            return mp.mpc(self.real, self.imag)

    @property
    def is_real(self) -> bool:
        return self.imag == 0

    def conjugate(self) -> "HPComplex":
        return HPComplex(self.real, -self.imag, self.precision_bits)

    def abs_value(self) -> mp.mpf:
        with mp.workprec(self.precision_bits):
            return mp.sqrt(self.real * self.real + self.imag * self.imag)

    __abs__ = abs_value

    def _coerce(self, other) -> tuple["HPComplex", int]:
        if isinstance(other, HPComplex):
            return other, max(self.precision_bits, other.precision_bits)
        return HPComplex.from_value(other, self.precision_bits), self.precision_bits

    def _binary(self, other, op) -> "HPComplex":
        other, prec = self._coerce(other)
        with mp.workprec(prec):
            value = op(self.to_mpc(), other.to_mpc())
        return HPComplex(value.real, value.imag, prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __neg__(self):
        return HPComplex(-self.real, -self.imag, self.precision_bits)

    def __eq__(self, other) -> bool:
        if isinstance(other, HPComplex):
            return self.real == other.real and self.imag == other.imag
        if isinstance(other, (int, float, Fraction, mp.mpf)):
            return self.imag == 0 and self.real == other
        if isinstance(other, (complex, mp.mpc)):
            return self.real == other.real and self.imag == other.imag
        return NotImplemented

    def __hash__(self):
        return hash((self.real, self.imag))

    def __repr__(self):
        return f"HPComplex({mp.nstr(self.real, 20)!r}, {mp.nstr(self.imag, 20)!r}, {self.precision_bits})"


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with Fraction components.

    Used by the terminating hypergeometric path and the Hahn evaluation so
    that "exact rational-complex value for rational inputs" is literal.
    """

    re: Fraction
    im: Fraction

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))

    @classmethod
    def i_power(cls, k: int) -> "GaussianRational":
        return (cls(1), cls(0, 1), cls(-1), cls(0, -1))[k % 4]

    def __add__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_gaussian(other) - self

    def __mul__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gaussian(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by Gaussian-rational zero")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return _as_gaussian(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_mpc(self, precision_bits: int = DEFAULT_PRECISION) -> mp.mpc:
        with mp.workprec(precision_bits):
            return mp.mpc(rational_to_mpf(self.re, precision_bits),
                          rational_to_mpf(self.im, precision_bits))

    def to_hpcomplex(self, precision_bits: int = DEFAULT_PRECISION) -> HPComplex:
        return HPComplex(rational_to_mpf(self.re, precision_bits),
                         rational_to_mpf(self.im, precision_bits), precision_bits)


def _as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(as_rational(x))


class RationalPolynomial:
    """Dense polynomial over Fraction; index i holds the coefficient of s^i.

    The zero polynomial is the empty coefficient tuple.  The last stored
    coefficient is always nonzero (normalization strips trailing zeros and
    is idempotent).
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        self.coefficients: tuple[Fraction, ...] = self._normalize(
            tuple(as_rational(c) for c in coefficients)
        )

    @staticmethod
    def _normalize(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        return tuple(coeffs[:end])

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPolynomial":
        return cls((1,))

    @classmethod
    def variable(cls) -> "RationalPolynomial":
        """The polynomial s."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.coefficients[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalPolynomial.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "RationalPolynomial":
        factor = as_rational(factor)
        return RationalPolynomial(tuple(c * factor for c in self.coefficients))

    def times_linear(self, a: RationalLike, b: RationalLike) -> "RationalPolynomial":
        """Multiply by (a*s + b) without building a temporary polynomial."""
        a, b = as_rational(a), as_rational(b)
        out = [Fraction(0)] * (len(self.coefficients) + 1)
        for i, c in enumerate(self.coefficients):
            out[i + 1] += c * a
            out[i] += c * b
        return RationalPolynomial(out)

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(
            tuple(i * c for i, c in enumerate(self.coefficients) if i >= 1)
        )

    def eval_rational(self, s: RationalLike) -> Fraction:
        s = as_rational(s)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * s + c
        return acc

    def eval_gaussian(self, s: GaussianRational) -> GaussianRational:
        acc = GaussianRational(0)
        for c in reversed(self.coefficients):
            acc = acc * s + GaussianRational(c)
        return acc

    def eval_mpc(self, s, precision_bits: int = DEFAULT_PRECISION):
        """Horner evaluation at an mpf/mpc point, at the given precision."""
        with mp.workprec(precision_bits + 16):
            z = mp.mpc(s) if not isinstance(s, mp.mpf) else s
            acc = mp.mpc(0) if isinstance(z, mp.mpc) else mp.mpf(0)
            for c in reversed(self.coefficients):
                acc = acc * z + rational_to_mpf(c, precision_bits + 16)
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            coeff = "" if (mag == 1 and i > 0) else str(mag)
            if i == 0:
                term = coeff
            elif i == 1:
                term = f"{coeff}s" if coeff else "s"
            else:
                term = f"{coeff}s^{i}" if coeff else f"s^{i}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coefficients]})"


def poly_affine_substitute(
    p: RationalPolynomial, a: RationalLike, b: RationalLike
) -> RationalPolynomial:
    """Exact p(a*s + b).  a = 0 collapses to the constant p(b)."""
    a, b = as_rational(a), as_rational(b)
    if a == 0:
        return RationalPolynomial((p.eval_rational(b),))
    acc = RationalPolynomial.zero()
    for c in reversed(p.coefficients):
        acc = acc.times_linear(a, b) + RationalPolynomial((c,))
    return acc


def poly_eval_complex(p: RationalPolynomial, s: HPComplex) -> HPComplex:
    """Horner-scheme value of p at s, at the precision carried by s."""
    prec = s.precision_bits
    value = p.eval_mpc(s.to_mpc(), prec)
    value = mp.mpc(value)
    return HPComplex(value.real, value.imag, prec)


def poly_structural_equal(p: RationalPolynomial, r: RationalPolynomial) -> bool:
    """True iff the normalized coefficient sequences are identical."""
    return p.coefficients == r.coefficients
