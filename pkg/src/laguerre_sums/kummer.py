"""Closed forms for 2F1(-1) of generalized-Kummer type.

The general theorems evaluate

    2F1[a, b; 1 + a - b +- j; -1],   j = 0, 1, 2, ...

as finite gamma-ratio sums.  Four specializations with a = -n, b = -n - nu
(or the pair swapped) terminate and are the workhorses of the series
reductions: each gives 2F1[-n, -n-nu; 1 +- nu +- j; -1] in j+1 terms.

All gamma ratios are assembled as gamma(top) * rgamma(bottom); terms whose
reciprocal factor is an exact zero are skipped before the partner gamma is
ever evaluated, so parity-killed terms cost nothing and can never produce
inf * 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .gamma import LATTICE_TOL, binomial, gamma, gamma_ratio, pochhammer, rgamma

PLUS_NU_PLUS_J = "plus_nu_plus_j"
MINUS_NU_PLUS_J = "minus_nu_plus_j"
PLUS_NU_MINUS_J = "plus_nu_minus_j"
MINUS_NU_MINUS_J = "minus_nu_minus_j"

VARIANTS = (PLUS_NU_PLUS_J, MINUS_NU_PLUS_J, PLUS_NU_MINUS_J, MINUS_NU_MINUS_J)


class KummerCaseError(ValueError):
    """The requested specialization violates its validity constraints."""


@dataclass(frozen=True)
class KummerCase:
    """One terminating instance: which sign pattern, plus (n, nu, j)."""

    variant: str
    n: int
    nu: float
    j: int

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise KummerCaseError(f"unknown variant {self.variant!r}")
        if self.n < 0 or self.j < 0:
            raise KummerCaseError("n and j must be non-negative")

    @property
    def denominator_parameter(self) -> float:
        snu = 1.0 if self.variant.startswith("plus") else -1.0
        sj = 1 if self.variant.endswith("plus_j") else -1
        return 1.0 + snu * self.nu + sj * self.j

    def validate(self) -> None:
        c = self.denominator_parameter
        k = round(c)
        if k <= 0 and abs(c - k) <= LATTICE_TOL * max(1.0, abs(c)):
            raise KummerCaseError(
                f"denominator parameter {c} is a non-positive integer"
            )


def kummer_plus(a: float, b: float, j: int) -> float:
    """2F1[a, b; 1+a-b+j; -1] by the generalized Kummer summation.

    2^(j-2b) * [G(b-j)/G(b)] * [G(1+a-b+j)/G(a-2b+j+1)]
        * sum_s (-1)^s C(j,s) G(a/2 - b + (j+s+1)/2) / G(a/2 + (s+1-j)/2)

    The G(b-j)/G(b) ratio is taken jointly so integer b (both gammas at
    poles) still yields the correct finite limit.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    front = gamma_ratio(b - j, b) * gamma(1.0 + a - b + j) * rgamma(a - 2.0 * b + j + 1.0)
    total = 0.0
    sign = 1.0
    for s in range(j + 1):
        rz = rgamma(0.5 * a - 0.5 * j + 0.5 * s + 0.5)
        if rz != 0.0:
            total += sign * binomial(j, s) * gamma(0.5 * a - b + 0.5 * j + 0.5 * s + 0.5) * rz
        sign = -sign
    return 2.0 ** (j - 2.0 * b) * front * total


def kummer_minus(a: float, b: float, j: int) -> float:
    """2F1[a, b; 1+a-b-j; -1] by the companion summation.

    2^(-j-2b) * [G(1+a-b-j)/G(a-2b-j+1)]
        * sum_s C(j,s) G(a/2 - b + (s+1-j)/2) / G(a/2 + (s+1-j)/2)
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    front = gamma(1.0 + a - b - j) * rgamma(a - 2.0 * b - j + 1.0)
    total = 0.0
    for s in range(j + 1):
        rz = rgamma(0.5 * a - 0.5 * j + 0.5 * s + 0.5)
        if rz != 0.0:
            total += binomial(j, s) * gamma(0.5 * a - b - 0.5 * j + 0.5 * s + 0.5) * rz
    return 2.0 ** (-j - 2.0 * b) * front * total


def _plus_nu_plus_j(n: int, nu: float, j: int) -> float:
    # 2F1[-n, -n-nu; 1+nu+j; -1]
    front = (
        2.0 ** (2 * n + 2.0 * nu + j)
        * (-1.0) ** (j % 2)
        * gamma(1.0 + nu + j)
        / pochhammer(1.0 + n + nu, j)
    )
    total = 0.0
    sign = 1.0
    for s in range(j + 1):
        rz = rgamma(-0.5 * n - 0.5 * j + 0.5 * s + 0.5)
        if rz != 0.0:
            total += sign * binomial(j, s) * rz * gamma_ratio(
                0.5 * n + nu + 0.5 * j + 0.5 * s + 0.5,
                n + 2.0 * nu + j + 1.0,
                den_rate=2.0,
            )
        sign = -sign
    return front * total


def _plus_nu_minus_j(n: int, nu: float, j: int) -> float:
    # 2F1[-n, -n-nu; 1+nu-j; -1]
    front = 2.0 ** (2 * n + 2.0 * nu - j) * gamma(1.0 + nu - j)
    total = 0.0
    for s in range(j + 1):
        rz = rgamma(-0.5 * n - 0.5 * j + 0.5 * s + 0.5)
        if rz != 0.0:
            total += binomial(j, s) * rz * gamma_ratio(
                0.5 * n + nu - 0.5 * j + 0.5 * s + 0.5,
                n + 2.0 * nu - j + 1.0,
                den_rate=2.0,
            )
    return front * total


def _minus_nu_plus_j(n: int, nu: float, j: int) -> float:
    # 2F1[-n, -n-nu; 1-nu+j; -1]
    two_nu = 2.0 * nu
    t = round(two_nu)
    if j >= 1 and abs(two_nu - t) <= LATTICE_TOL * max(1.0, abs(two_nu)):
        # 1 - nu + j == 1 + nu + (j - 2nu): reroute to the +nu forms, whose
        # parity zeros are exact; the direct sum below cancels
        # catastrophically at half-integer nu.
        t = int(t)
        if j - t >= 0:
            return _plus_nu_plus_j(n, nu, j - t)
        return _plus_nu_minus_j(n, nu, t - j)
    front = (
        2.0 ** (2 * n + j)
        * (-1.0) ** (j % 2)
        * math.factorial(n)
        / (math.factorial(j) * pochhammer(1.0 + j, n) * pochhammer(1.0 - nu + j, n))
    )
    total = 0.0
    sign = 1.0
    for s in range(j + 1):
        rz = rgamma(-0.5 * n - 0.5 * nu - 0.5 * j + 0.5 * s + 0.5)
        if rz != 0.0:
            total += sign * binomial(j, s) * rz * gamma(
                0.5 * n - 0.5 * nu + 0.5 * j + 0.5 * s + 0.5
            )
        sign = -sign
    return front * total


def _minus_nu_minus_j(n: int, nu: float, j: int) -> float:
    # 2F1[-n, -n-nu; 1-nu-j; -1]
    front = 2.0 ** (2 * n - j) / pochhammer(1.0 - nu - j, n)
    total = 0.0
    for s in range(j + 1):
        rz = rgamma(-0.5 * n - 0.5 * nu - 0.5 * j + 0.5 * s + 0.5)
        if rz != 0.0:
            total += binomial(j, s) * rz * gamma(
                0.5 * n - 0.5 * nu - 0.5 * j + 0.5 * s + 0.5
            )
    return front * total


_DISPATCH = {
    PLUS_NU_PLUS_J: _plus_nu_plus_j,
    MINUS_NU_PLUS_J: _minus_nu_plus_j,
    PLUS_NU_MINUS_J: _plus_nu_minus_j,
    MINUS_NU_MINUS_J: _minus_nu_minus_j,
}


def kummer_special(case: KummerCase) -> float:
    """Terminating 2F1[-n, -n-nu; 1 +- nu +- j; -1] via the matching closed form."""
    case.validate()
    return _DISPATCH[case.variant](case.n, case.nu, case.j)

