"""Laguerre polynomials and the direct-series ground truth.

oracle_sum evaluates

    e^{-x} sum_n  x^n L_n^{(nu)}(x) (f+m)_n / ((1 +- nu +- p)_n (f)_n)

straight from the definition.  Every closed form in this package is judged
against it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .gamma import LATTICE_TOL
from .pfq import (
    CONVERGED,
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    MAX_TERMS_HIT,
    SMALL_STREAK,
    TERMINATED,
    EvalResult,
)
from .summation import KahanSum

PLUS = "+"
MINUS = "-"


class InvalidSumSpecError(ValueError):
    """The series parameters violate a validity constraint."""


def _near_nonpos_int(x: float, tol: float) -> bool:
    k = round(x)
    return k <= 0 and abs(x - k) <= tol


@dataclass(frozen=True)
class SumSpec:
    """One series instance: signs, integer shifts m and p, and nu, f, x."""

    m: int
    p: int
    sign_nu: str
    sign_p: str
    nu: float
    f: float
    x: float

    def __post_init__(self) -> None:
        if self.sign_nu not in (PLUS, MINUS) or self.sign_p not in (PLUS, MINUS):
            raise InvalidSumSpecError("signs must be '+' or '-'")
        if self.m < 0 or self.p < 0:
            raise InvalidSumSpecError("m and p must be non-negative integers")

    @property
    def signed_nu(self) -> float:
        return self.nu if self.sign_nu == PLUS else -self.nu

    @property
    def signed_p(self) -> int:
        return self.p if self.sign_p == PLUS else -self.p

    @property
    def denom_base(self) -> float:
        """The shifted denominator parameter 1 +- nu +- p."""
        return 1.0 + self.signed_nu + self.signed_p

    @property
    def variant(self) -> str:
        return f"{self.sign_nu}nu{self.sign_p}p"

    def violations(self, tol: float = LATTICE_TOL) -> list[str]:
        """Names of violated validity constraints (empty when valid).

        Checks, within tol of the pole lattice: f not a non-positive
        integer, the denominator base 1 +- nu +- p not a non-positive
        integer, and the same for its shifts by r = 0..m.
        """
        out: list[str] = []
        if _near_nonpos_int(self.f, tol):
            out.append(f"f = {self.f} is a non-positive integer")
        base = self.denom_base
        for r in range(self.m + 1):
            if _near_nonpos_int(base + r, tol):
                label = f"1{self.sign_nu}nu{self.sign_p}p"
                if r:
                    label += f"+{r}"
                out.append(f"{label} = {base + r} is a non-positive integer")
        return out

    def validate(self, tol: float = LATTICE_TOL) -> None:
        bad = self.violations(tol)
        if bad:
            raise InvalidSumSpecError("; ".join(bad))


@dataclass(frozen=True)
class LaguerreSeq:
    """L_n^{(nu)}(x) for n = 0..N at fixed nu and x."""

    nu: float
    values: list[float]


def laguerre_seq(nu: float, x: float, n_max: int) -> LaguerreSeq:
    """Generalized Laguerre values by the three-term recurrence.

    n L_n = (2n - 1 + nu - x) L_{n-1} - (n - 1 + nu) L_{n-2},
    seeded with L_0 = 1 and L_1 = 1 - x + nu.  Forward-stable at the
    desk scales used here (x >= 0, nu > -1).
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    values = [1.0]
    if n_max >= 1:
        values.append(1.0 - x + nu)
    for n in range(2, n_max + 1):
        values.append(
            ((2 * n - 1 + nu - x) * values[n - 1] - (n - 1 + nu) * values[n - 2]) / n
        )
    return LaguerreSeq(nu=nu, values=values)


def oracle_sum(
    spec: SumSpec,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Direct accumulation of the defining series (the ground truth).

    The Laguerre factor comes from the recurrence; the rational coefficient
    x^n (f+m)_n / ((1 +- nu +- p)_n (f)_n) is updated by running ratios.
    The e^{-x} factor is applied once at the end.
    """
    spec.validate()
    base = spec.denom_base
    lag = laguerre_seq(spec.nu, spec.x, max_terms).values
    acc = KahanSum()
    coef = 1.0
    small = 0
    n = 0
    while n < max_terms:
        term = coef * lag[n]
        acc.add(term)
        n += 1
        coef *= spec.x * (spec.f + spec.m + (n - 1)) / ((base + (n - 1)) * (spec.f + (n - 1)))
        if abs(term) <= tol * max(1.0, abs(acc.total)):
            small += 1
            if small >= SMALL_STREAK:
                scale = math.exp(-spec.x)
                status = TERMINATED if coef == 0.0 or spec.x == 0.0 else CONVERGED
                next_mag = abs(coef * lag[n]) * scale if n < len(lag) else 0.0
                return EvalResult(acc.total * scale, n, next_mag, status)
        else:
            small = 0
    scale = math.exp(-spec.x)
    next_mag = abs(coef * lag[n]) * scale if n < len(lag) else abs(coef) * scale
    return EvalResult(acc.total * scale, n, next_mag, MAX_TERMS_HIT)
