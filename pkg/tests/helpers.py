"""Independent reference computations used as test oracles.

Nothing here goes through the package's evaluation paths: Bessel values
come from their own defining series, terminating hypergeometric sums from
exact rational arithmetic, and generic finite sums from a bare product
loop.
"""
from __future__ import annotations

import math
from fractions import Fraction


def bessel_j_series(nu: float, y: float, terms: int = 60) -> float:
    """J_nu(y) summed straight from sum_k (-1)^k (y/2)^(nu+2k) / (k! G(nu+k+1))."""
    half = 0.5 * y
    total = 0.0
    term = half**nu / math.gamma(nu + 1.0)
    for k in range(terms):
        total += term
        term *= -(half * half) / ((k + 1.0) * (nu + k + 1.0))
    return total


def scaled_bessel(nu: float, x: float) -> float:
    """G(1+nu) x^(-nu) J_nu(2x); the x -> 0 limit is 1."""
    if x == 0.0:
        return 1.0
    return math.gamma(1.0 + nu) * x ** (-nu) * bessel_j_series(nu, 2.0 * x)


def poch(a: float, n: int) -> float:
    r = 1.0
    for i in range(n):
        r *= a + i
    return r


def direct_pfq(nums, dens, z: float, terms: int) -> float:
    """Plain term-by-term partial sum via rising-factorial products."""
    total = 0.0
    for n in range(terms):
        t = z**n / math.factorial(n)
        for a in nums:
            t *= poch(a, n)
        for b in dens:
            t /= poch(b, n)
        total += t
    return total


def exact_gauss_2f1_m1(n: int, nu: float, sign_nu: int, sign_j: int, j: int) -> Fraction:
    """Terminating 2F1[-n, -n-nu; 1 + sign_nu*nu + sign_j*j; -1], exactly.

    All arithmetic is over the rationals, on the exact binary64 value of nu,
    so alternating cancellation costs nothing; the denominator parameter is
    built inside the rationals to keep the identity's parameter coupling
    exact.
    """
    nu_q = Fraction(nu)
    c = 1 + sign_nu * nu_q + sign_j * j
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        total += term
        term *= Fraction(k - n) * (k - n - nu_q) * Fraction(-1)
        term /= (c + k) * (k + 1)
    return total


def exact_2f1_m1_params(n: int, b: Fraction, c: Fraction) -> Fraction:
    """Terminating 2F1[-n, b; c; -1] over the rationals."""
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        total += term
        term *= Fraction(k - n) * (b + k) * Fraction(-1)
        term /= (c + k) * (k + 1)
    return total
