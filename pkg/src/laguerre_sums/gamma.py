"""Scalar gamma-function kernels.

Everything downstream (series coefficients, Kummer-type closed forms) is
assembled from four primitives: gamma, its reciprocal (a total function,
zero at the poles), the rising factorial, and binomial coefficients.  The
reciprocal form matters: the closed-form coefficients place gamma factors
at non-positive integers in denominators on purpose, and those terms must
vanish cleanly instead of raising.
"""
from __future__ import annotations

import math

SQRT_PI = math.sqrt(math.pi)

# Absolute slack when deciding whether an argument sits on the pole lattice
# or on the half-integer fast path.
LATTICE_TOL = 1e-12


class PoleError(ValueError):
    """A gamma factor was requested at a non-positive integer."""


def _nonpos_int(x: float) -> int | None:
    """Return k >= 0 if x is within tolerance of the pole -k, else None."""
    k = round(x)
    if k <= 0 and abs(x - k) <= LATTICE_TOL * max(1.0, abs(x)):
        return -int(k)
    return None


def _gamma_half_lattice(two_x: int) -> float:
    """Gamma(two_x / 2) by exact recursion from Gamma(1/2) and Gamma(1).

    two_x must not be an even integer <= 0.  Recursing from the seed values
    keeps half-integer arguments exact up to a handful of rounding errors,
    which the coefficient algebra downstream relies on.
    """
    if two_x % 2 == 0:
        n = two_x // 2  # Gamma(n) = (n-1)!
        if n <= 0:
            raise PoleError(f"gamma pole at {two_x / 2}")
        return float(math.factorial(n - 1))
    value = SQRT_PI  # Gamma(1/2)
    if two_x > 1:
        x = 0.5
        for _ in range((two_x - 1) // 2):
            value *= x
            x += 1.0
    elif two_x < 1:
        x = 0.5
        for _ in range((1 - two_x) // 2):
            x -= 1.0
            value /= x
    return value


def gamma(x: float) -> float:
    """Gamma(x) for real x away from the non-positive integers.

    Arguments within LATTICE_TOL of a half-integer take the exact-recursion
    path; everything else defers to the platform Lanczos-class libm
    implementation (relative error well under 1e-14 for |x| <= 50).
    """
    two_x = 2.0 * x
    k2 = round(two_x)
    if abs(two_x - k2) <= LATTICE_TOL * max(1.0, abs(two_x)):
        return _gamma_half_lattice(int(k2))
    try:
        return math.gamma(x)
    except ValueError:  # pragma: no cover - lattice check should catch poles
        raise PoleError(f"gamma pole at {x}") from None


def rgamma(x: float) -> float:
    """1/Gamma(x), extended to a total function: exactly 0.0 at 0, -1, -2, ...

    This is the mechanism that silently drops pole-killed terms in the
    closed-form coefficient sums.
    """
    if _nonpos_int(x) is not None:
        return 0.0
    try:
        return 1.0 / gamma(x)
    except OverflowError:
        return 0.0  # Gamma(x) overflows only for large positive x


def gamma_ratio(num: float, den: float, den_rate: float = 1.0) -> float:
    """Gamma(num)/Gamma(den) with a defined value at joint poles.

    Assembled as gamma(num) * rgamma(den), so a denominator pole yields an
    exact zero.  When *both* arguments sit on the pole lattice the ratio is
    taken as the limit along a shared parameter that moves den at den_rate
    times the speed of num:

        Gamma(-k + e) / Gamma(-K + den_rate*e)
            -> den_rate * (-1)**(k+K) * K! / k!

    A lone numerator pole has no finite limit and raises PoleError.
    """
    kd = _nonpos_int(den)
    if kd is not None:
        kn = _nonpos_int(num)
        if kn is None:
            return 0.0
        sign = -1.0 if (kn + kd) % 2 else 1.0
        return den_rate * sign * float(math.factorial(kd)) / float(math.factorial(kn))
    kn = _nonpos_int(num)
    if kn is not None:
        raise PoleError(f"gamma pole at {num} with regular denominator {den}")
    return gamma(num) * rgamma(den)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.

    Computed by direct product rather than gamma ratios so that
    negative-integer bases give exact zeros, e.g. (-2)_3 = 0.
    """
    if n < 0:
        raise ValueError("pochhammer order must be non-negative")
    result = 1.0
    for i in range(n):
        result *= a + i
    return result


def binomial(n: int, k: int) -> float:
    """Binomial coefficient as a float, exact integer arithmetic underneath."""
    if k < 0 or k > n:
        raise ValueError(f"binomial requires 0 <= k <= n, got n={n}, k={k}")
    return float(math.comb(n, k))

