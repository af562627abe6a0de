"""Tanh-sinh (double-exponential) quadrature on a finite interval.

The integrand callback receives, besides the node x itself, its exact
distances to both endpoints.  Endpoint-singular factors like cos^(s-1) of
an angle near pi/2 must be computed from those distances; recovering them
from x loses everything once the transform pushes nodes exponentially close
to the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .errors import ConvergenceError, DomainError

_GUARD = 24


@dataclass(frozen=True)
class QuadratureResult:
    value: object            # mpf or mpc
    error_estimate: mp.mpf   # |last level - previous level|
    levels_used: int
    nodes_used: int


def tanh_sinh(
    f,
    a,
    b,
    precision_bits: int,
    tolerance=None,
    min_level: int = 3,
    max_level: int = 13,
) -> QuadratureResult:
    """Integrate f over (a, b).

    f(x, dist_a, dist_b) -> mpf or mpc, where dist_a = x - a and
    dist_b = b - x are supplied without cancellation.  The node sum is
    refined by halving the step and reusing previous nodes; the returned
    error estimate is the last inter-level difference.  Raises
    ConvergenceError when max_level doublings do not reach the tolerance.
    """
    if not (min_level >= 0 and max_level >= min_level):
        raise DomainError("levels must satisfy 0 <= min_level <= max_level")
    workprec = precision_bits + _GUARD
    with mp.workprec(workprec):
        a = mp.mpf(a)
        b = mp.mpf(b)
        if not b > a:
            raise DomainError(f"empty or reversed interval ({a}, {b})")
        half = (b - a) / 2
        tol = mp.mpf(tolerance) if tolerance is not None else mp.mpf(2) ** (-precision_bits)
        # abscissa cutoff: weights decay like exp(-pi/2 * sinh t)
        t_max = mp.asinh((mp.mpf(2) / mp.pi) * mp.log(2) * (workprec + 16))
        half_pi = mp.pi / 2

        def node_sum(t):
            # contributions of +t and -t (or just t = 0 once)
            w = half_pi * mp.sinh(t)
            e2w = mp.exp(2 * w)
            dist_hi = half * 2 / (e2w + 1)          # half*(1 - tanh w)
            dist_lo = half * 2 / (1 + 1 / e2w)      # half*(1 + tanh w)
            sech2 = (2 / (mp.exp(w) + mp.exp(-w))) ** 2
            weight = half * half_pi * mp.cosh(t) * sech2
            if t == 0:
                return weight * f(a + dist_lo, dist_lo, dist_hi)
            v_plus = f(b - dist_hi, dist_lo, dist_hi)
            v_minus = f(a + dist_hi, dist_hi, dist_lo)
            return weight * (v_plus + v_minus)

        nodes_used = 0
        scale = mp.mpf(1)

        def tail_sum(h, start_k, step):
            # sum node contributions until, beyond t_max, they stay below
            # the cutoff; singular integrands push useful nodes past t_max
            nonlocal nodes_used
            stop_eps = mp.mpf(2) ** (-(workprec + 8)) * scale
            total = mp.mpf(0)
            k = start_k
            consecutive_small = 0
            while True:
                t = k * h
                term = node_sum(t)
                total += term
                nodes_used += 1 if t == 0 else 2
                if t > t_max:
                    if abs(term) < stop_eps:
                        consecutive_small += 1
                        if consecutive_small >= 2:
                            return total
                    else:
                        consecutive_small = 0
                    if t > 8 * t_max + 10:
                        raise ConvergenceError(
                            "node contributions do not decay; integrand likely "
                            "not integrable on this interval"
                        )
                k += step
            return total

        h = mp.mpf(1)
        estimate = h * tail_sum(h, 0, 1)
        scale = max(scale, abs(estimate))
        error = mp.inf

        level = 0
        while level < max_level:
            level += 1
            h = h / 2
            new_estimate = estimate / 2 + h * tail_sum(h, 1, 2)
            error = abs(new_estimate - estimate)
            estimate = new_estimate
            scale = max(scale, abs(estimate))
            if level >= min_level and error <= tol * (1 + abs(estimate)):
                return QuadratureResult(estimate, error, level, nodes_used)
        raise ConvergenceError(
            f"tanh-sinh did not reach tolerance {mp.nstr(tol, 5)} in {max_level} levels "
            f"(last inter-level difference {mp.nstr(error, 5)})"
        )
