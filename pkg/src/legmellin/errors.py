"""Error taxonomy shared by every module.

DomainError    argument outside the operation's stated half-plane/parity.
PoleError      an exact pole was hit (gamma at nonpositive integers,
               zeta at 1, a denominator Pochhammer vanishing too early).
DivergenceError no evaluation strategy applies (series diverges).
ConvergenceError an iterative scheme exhausted its budget before
               meeting its certificate or tail bound.
"""

from __future__ import annotations


class DomainError(ValueError):
    pass


class PoleError(ArithmeticError):
    pass


class DivergenceError(ArithmeticError):
    pass


class ConvergenceError(RuntimeError):
    pass
