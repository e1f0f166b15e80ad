"""Generic truncated evaluation of generalized hypergeometric series.

pFq([a1..aP], [b1..bQ]; z) = sum_n  prod (ai)_n / prod (bj)_n * z^n / n!

The instances that arise here have Q = P + 1 and argument -x^2, so the
series are entire and converge Bessel-fast; the evaluator nevertheless
guards against terminating numerators, denominator poles and slow tails.
"""
from __future__ import annotations

from dataclasses import dataclass

from .gamma import LATTICE_TOL
from .summation import KahanSum

DEFAULT_TOL = 1e-14
DEFAULT_MAX_TERMS = 400

CONVERGED = "converged"
TERMINATED = "terminated"
MAX_TERMS_HIT = "max_terms_hit"

# Terms must stay this small for this many consecutive indices before the
# tail is trusted; a single small term is not safe for alternating series
# with interior humps.
SMALL_STREAK = 3


class SeriesPoleError(ArithmeticError):
    """A denominator Pochhammer vanished before the series terminated."""


class ConvergenceError(ArithmeticError):
    """A series failed to meet its tolerance within the term budget."""


@dataclass(frozen=True)
class PFQSpec:
    """Parameter set of one pFq series: numerators, denominators, argument."""

    num_params: tuple[float, ...]
    den_params: tuple[float, ...]
    argument: float


@dataclass(frozen=True)
class EvalResult:
    """Outcome of a truncated series evaluation.

    trunc_estimate is the magnitude of the first neglected term (0.0 when
    the series terminated exactly).
    """

    value: float
    terms_used: int
    trunc_estimate: float
    status: str


def is_terminating(spec: PFQSpec) -> int | None:
    """Smallest n such that some numerator parameter equals -n, else None."""
    best: int | None = None
    for a in spec.num_params:
        k = round(a)
        if k <= 0 and abs(a - k) <= LATTICE_TOL * max(1.0, abs(a)):
            n = -int(k)
            if best is None or n < best:
                best = n
    return best


def pfq_eval(
    spec: PFQSpec,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Partial sum of the defining series with running-ratio term updates.

    term_{n+1} = term_n * prod(ai + n) / prod(bj + n) * z / (n + 1)

    Stops when SMALL_STREAK consecutive terms fall below
    tol * max(1, |partial|), or exactly at a terminating numerator.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    n_stop = is_terminating(spec)
    z = spec.argument
    acc = KahanSum()
    term = 1.0
    small = 0
    n = 0
    while n < max_terms:
        acc.add(term)
        n += 1
        if n_stop is not None and n > n_stop:
            return EvalResult(acc.total, n, 0.0, TERMINATED)
        ratio = z / n
        for a in spec.num_params:
            ratio *= a + (n - 1)
        if ratio != 0.0:
            for b in spec.den_params:
                d = b + (n - 1)
                if d == 0.0:
                    raise SeriesPoleError(
                        f"denominator parameter {b} hits a pole at term {n}"
                    )
                ratio /= d
        next_term = term * ratio
        if next_term == 0.0 and n_stop is None:
            # numerator factor (or argument) vanished exactly
            return EvalResult(acc.total, n, 0.0, TERMINATED)
        if abs(term) <= tol * max(1.0, abs(acc.total)):
            small += 1
            if small >= SMALL_STREAK:
                return EvalResult(acc.total, n, abs(next_term), CONVERGED)
        else:
            small = 0
        term = next_term
    return EvalResult(acc.total, n, abs(term), MAX_TERMS_HIT)
