"""Closed hypergeometric evaluations of the Laguerre series.

Four sign variants are covered, at shift m = 0 and general m >= 0, plus the
mixed finite-sum representation (lemma route), the two-branch rewrite needed
for sign_p = '-' with m > p, and the m = 1, p = 0 Bessel contraction.

Numerical strategy
------------------
The two variants with +nu in the series denominator carry gamma-ratio
prefactors of the shape G(...)/G(2c) next to hypergeometric blocks whose
last two denominator parameters are exactly (c, c + 1/2).  Those pieces are
evaluated *folded* together, using the duplication identity

    G(2c) (c)_n (c + 1/2)_n = G(2c + 2n) / 4^n,

so each series term carries a single ratio G(c + sigma + n)/G(2c + 2n).
That ratio stays meaningful, via the rate-aware joint-pole limit in
gamma_ratio, even where 2c degenerates to a non-positive integer (e.g.
nu = 1/2 with sign_p = '-' and p >= 2), where the unfolded prefactor and
blocks are individually singular with a finite product.

The -nu variants have no such degeneracy for non-integer nu and are
assembled literally: coefficient times hypergeometric block, with
coefficients built as gamma(top) * rgamma(bottom) and pole-killed terms
skipped before any block is evaluated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .gamma import LATTICE_TOL, binomial, gamma, gamma_ratio, pochhammer, rgamma
from .kummer import (
    MINUS_NU_MINUS_J,
    MINUS_NU_PLUS_J,
    PLUS_NU_MINUS_J,
    PLUS_NU_PLUS_J,
    KummerCase,
    kummer_special,
)
from .laguerre import PLUS, InvalidSumSpecError, SumSpec
from .pfq import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    MAX_TERMS_HIT,
    SMALL_STREAK,
    ConvergenceError,
    PFQSpec,
    pfq_eval,
)
from .summation import KahanSum

ROUTE_S0 = "s0"
ROUTE_SM = "sm"
ROUTE_SPLIT = "split"


# ---------------------------------------------------------------------------
# coefficient sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientSet:
    """One gamma-ratio coefficient A/B/C/D at summation indices (r, s).

    nu_slot and p_slot carry the signs of the variant; r is the shift index
    and is *signed*: the sign_p = '-' variants index their coefficients with
    -r, which flips the r-term in the reciprocal gamma while |r| keeps the
    numerator shift positive.
    """

    kind: str
    r: int
    s: int
    nu_slot: float
    p_slot: float

    def value(self) -> float:
        h = 0.5
        ar = abs(self.r)
        ap = abs(self.p_slot)
        if self.kind == "A":
            top = self.nu_slot + h * self.p_slot + h * ar + h * self.s + 0.5
            bottom = h * self.s - h * ap - h * self.r + 0.5
        elif self.kind == "B":
            top = self.nu_slot + h * self.p_slot + h * ar + h * self.s + 1.0
            bottom = h * self.s - h * ap - h * self.r
        elif self.kind == "C":
            top = h * self.nu_slot + h * self.p_slot + h * ar + h * self.s + 0.5
            bottom = h * self.nu_slot - h * ap - h * self.r + h * self.s + 0.5
        elif self.kind == "D":
            top = h * self.nu_slot + h * self.p_slot + h * ar + h * self.s + 1.0
            bottom = h * self.nu_slot - h * ap - h * self.r + h * self.s
        else:
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        diff = top - bottom
        kappa = round(diff)
        if 0 <= kappa <= 64 and abs(diff - kappa) <= LATTICE_TOL:
            # G(bottom + kappa)/G(bottom) is a rising factorial; the product
            # form is exact, including the zeros at pole-killed terms
            return pochhammer(bottom, int(kappa))
        rz = rgamma(bottom)
        if rz == 0.0:
            return 0.0
        return gamma(top) * rz


# ---------------------------------------------------------------------------
# hypergeometric block parameter lists
# ---------------------------------------------------------------------------

def hyper_block(which: int, r: int, s: int, p: int, nu: float, x: float) -> PFQSpec:
    """Parameter lists of the blocks F_r^{(1..8)} at general shift r."""
    hn, hp, hr, hs = 0.5 * nu, 0.5 * p, 0.5 * r, 0.5 * s
    z = -x * x
    if which == 1:
        return PFQSpec(
            (0.5 + hn + hr, 1 + hn + hr, 0.5 + nu + hp + hr + hs, 0.5 + hp + hr - hs),
            (0.5, 0.5 + hn + hp + hr, 1 + hn + hp + hr, 0.5 + nu + hp + hr, 1 + nu + hp + hr),
            z,
        )
    if which == 2:
        return PFQSpec(
            (1 + hn + hr, 1.5 + hn + hr, 1 + nu + hp + hr + hs, 1 + hp + hr - hs),
            (1.5, 1 + hn + hp + hr, 1.5 + hn + hp + hr, 1 + nu + hp + hr, 1.5 + nu + hp + hr),
            z,
        )
    if which == 3:
        return PFQSpec(
            (0.5 + hn + hr, 1 + hn + hr, 0.5 + nu - hp + hr + hs, 0.5 + hp - hr - hs),
            (0.5, 0.5 + hn, 1 + hn, 0.5 + nu - hp + hr, 1 + nu - hp + hr),
            z,
        )
    if which == 4:
        return PFQSpec(
            (1 + hn + hr, 1.5 + hn + hr, 1 + nu - hp + hr + hs, 1 + hp - hr - hs),
            (1.5, 1 + hn, 1.5 + hn, 1 + nu - hp + hr, 1.5 + nu - hp + hr),
            z,
        )
    if which == 5:
        return PFQSpec(
            (1.0, 0.5 + hn + hr, 1 + hn + hr, 0.5 - hn + hp + hr + hs, 0.5 + hn + hp + hr - hs),
            (0.5 + hn, 1 + hn, 0.5 + hp + hr, 1 + hp + hr, 0.5 - hn + hp + hr, 1 - hn + hp + hr),
            z,
        )
    if which == 6:
        return PFQSpec(
            (1.0, 1 + hn + hr, 1.5 + hn + hr, 1 - hn + hp + hr + hs, 1 + hn + hp + hr - hs),
            (1 + hn, 1.5 + hn, 1 + hp + hr, 1.5 + hp + hr, 1 - hn + hp + hr, 1.5 - hn + hp + hr),
            z,
        )
    if which == 7:
        return PFQSpec(
            (0.5 + hn + hr, 1 + hn + hr, 0.5 - hn - hp + hr + hs, 0.5 + hn + hp - hr - hs),
            (0.5, 0.5 + hn, 1 + hn, 0.5 - hn - hp + hr, 1 - hn - hp + hr),
            z,
        )
    if which == 8:
        return PFQSpec(
            (1 + hn + hr, 1.5 + hn + hr, 1 - hn - hp + hr + hs, 1 + hn + hp - hr - hs),
            (1.5, 1 + hn, 1.5 + hn, 1 - hn - hp + hr, 1.5 - hn - hp + hr),
            z,
        )
    raise ValueError(f"block index must be 1..8, got {which}")


def hyper_block_m0(which: int, s: int, p: int, nu: float, x: float) -> PFQSpec:
    """Shift-free (m = 0) block lists; 3..8 are the contracted lower orders."""
    hn, hp, hs = 0.5 * nu, 0.5 * p, 0.5 * s
    z = -x * x
    if which in (1, 2):
        return hyper_block(which, 0, s, p, nu, x)
    if which == 3:
        return PFQSpec(
            (0.5 + nu - hp + hs, 0.5 + hp - hs),
            (0.5, 0.5 + nu - hp, 1 + nu - hp),
            z,
        )
    if which == 4:
        return PFQSpec(
            (1 + nu - hp + hs, 1 + hp - hs),
            (1.5, 1 + nu - hp, 1.5 + nu - hp),
            z,
        )
    if which == 5:
        return PFQSpec(
            (1.0, 0.5 + hn + hp - hs, 0.5 - hn + hp + hs),
            (0.5 + hp, 1 + hp, 0.5 - hn + hp, 1 - hn + hp),
            z,
        )
    if which == 6:
        return PFQSpec(
            (1.0, 1 + hn + hp - hs, 1 - hn + hp + hs),
            (1 + hp, 1.5 + hp, 1 - hn + hp, 1.5 - hn + hp),
            z,
        )
    if which == 7:
        return PFQSpec(
            (0.5 - hn - hp + hs, 0.5 + hn + hp - hs),
            (0.5, 0.5 - hn - hp, 1 - hn - hp),
            z,
        )
    if which == 8:
        return PFQSpec(
            (1 - hn - hp + hs, 1 + hn + hp - hs),
            (1.5, 1 - hn - hp, 1.5 - hn - hp),
            z,
        )
    raise ValueError(f"block index must be 1..8, got {which}")


@dataclass(frozen=True)
class HyperBlock:
    """Descriptor of one F_r^{(j)} block; spec() yields its parameter set."""

    which: int
    r: int
    s: int
    p: int
    nu: float
    x: float
    contracted: bool = False

    def spec(self) -> PFQSpec:
        if self.contracted:
            if self.r != 0:
                raise ValueError("contracted block lists exist only at r = 0")
            return hyper_block_m0(self.which, self.s, self.p, self.nu, self.x)
        return hyper_block(self.which, self.r, self.s, self.p, self.nu, self.x)


# ---------------------------------------------------------------------------
# folded series engine for the +nu variants
# ---------------------------------------------------------------------------

def _folded_series(
    c: float,
    sigma: float,
    nums: tuple[float, ...],
    dens: tuple[float, ...],
    z: float,
    tol: float,
    max_terms: int,
) -> float:
    """sum_n G(c+sigma+n)/G(2c+2n) * 4^n * prod(nums)_n / (prod(dens)_n n!) * z^n.

    This is a hypergeometric block with denominator pair (c, c+1/2) folded
    against a 1/G(2c) prefactor.  When 2c sits on the non-positive integer
    lattice the low-order terms go through gamma_ratio's joint limit; the
    tail is generated by ratio updates either way.
    """
    if set(nums) & set(dens):
        # drop exactly-equal parameter pairs: their term ratios are 1 but
        # the separate multiply/divide roundings would still accumulate
        remaining = list(dens)
        kept = []
        for a in nums:
            if a in remaining:
                remaining.remove(a)
            else:
                kept.append(a)
        nums, dens = tuple(kept), tuple(remaining)
    two_c = 2.0 * c
    k2 = round(two_c)
    degenerate = k2 <= 0 and abs(two_c - k2) <= LATTICE_TOL * max(1.0, abs(two_c))
    acc = KahanSum()

    if degenerate:
        n_start = (-int(k2)) // 2 + 1  # first n with 2c + 2n > 0
        prod = 1.0
        for n in range(n_start):
            acc.add(gamma_ratio(c + sigma + n, two_c + 2 * n, den_rate=2.0) * prod)
            fac = 4.0 * z / (n + 1.0)
            for a in nums:
                fac *= a + n
            for b in dens:
                fac /= b + n
            prod *= fac
        term = gamma_ratio(c + sigma + n_start, two_c + 2 * n_start, den_rate=2.0) * prod
    else:
        n_start = 0
        term = gamma_ratio(c + sigma, two_c, den_rate=2.0)

    small = 0
    n = n_start
    while n < n_start + max_terms:
        acc.add(term)
        if abs(term) <= tol * max(1.0, abs(acc.total)):
            small += 1
            if small >= SMALL_STREAK:
                return acc.total
        else:
            small = 0
        fac = 4.0 * z * (c + sigma + n) / (
            (two_c + 2 * n) * (two_c + 2 * n + 1) * (n + 1.0)
        )
        for a in nums:
            fac *= a + n
        for b in dens:
            fac /= b + n
        term *= fac
        n += 1
    raise ConvergenceError("folded series did not converge within max_terms")


def _block_pfq(spec: PFQSpec, tol: float, max_terms: int) -> float:
    # cancel exactly-equal parameter pairs and canonicalize the order, so
    # the shift-free contractions of the blocks evaluate bit-identically
    # to their displayed lower-order forms
    nums, dens = spec.num_params, spec.den_params
    if set(nums) & set(dens):
        remaining = list(dens)
        kept = []
        for a in nums:
            if a in remaining:
                remaining.remove(a)
            else:
                kept.append(a)
        nums, dens = tuple(kept), tuple(remaining)
    spec = PFQSpec(tuple(sorted(nums)), tuple(sorted(dens)), spec.argument)
    res = pfq_eval(spec, tol=tol, max_terms=max_terms)
    if res.status == MAX_TERMS_HIT:
        raise ConvergenceError("hypergeometric block did not converge")
    return res.value


# ---------------------------------------------------------------------------
# the four sign variants at general m
# ---------------------------------------------------------------------------

def _sum_plus_plus(m: int, p: int, nu: float, f: float, x: float,
                   tol: float, max_terms: int) -> float:
    z = -x * x
    hn = 0.5 * nu
    outer = KahanSum()
    for r in range(m + 1):
        hp_r = 0.5 * (p + r)
        c = 0.5 + nu + hp_r
        pre = (
            binomial(m, r)
            * (-2.0 * x) ** r
            * gamma(1.0 + nu + r)
            / (pochhammer(f, r) * pochhammer(1.0 + nu + p, r))
        )
        nums_a = (0.5 + hn + 0.5 * r, 1.0 + hn + 0.5 * r)
        dens_a = (0.5, 0.5 + hn + hp_r, 1.0 + hn + hp_r)
        nums_b = (1.0 + hn + 0.5 * r, 1.5 + hn + 0.5 * r)
        dens_b = (1.5, 1.0 + hn + hp_r, 1.5 + hn + hp_r)
        inner = KahanSum()
        sign = 1.0
        for s in range(p + r + 1):
            hs = 0.5 * s
            ra = rgamma(hs - hp_r + 0.5)
            ta = 0.0
            if ra != 0.0:
                ta = ra * _folded_series(
                    c, hs, nums_a + (0.5 + hp_r - hs,), dens_a, z, tol, max_terms
                )
            rb = rgamma(hs - hp_r)
            tb = 0.0
            if rb != 0.0:
                tb = (4.0 * x * (1.0 + nu + r) / (1.0 + nu + p + r)) * rb * _folded_series(
                    c + 0.5, hs, nums_b + (1.0 + hp_r - hs,), dens_b, z, tol, max_terms
                )
            inner.add(sign * binomial(p + r, s) * (ta - tb))
            sign = -sign
        outer.add(pre * inner.total)
    return (-1.0) ** (p % 2) * 2.0 ** (2.0 * nu + p) * outer.total


def _sum_plus_minus(m: int, p: int, nu: float, f: float, x: float,
                    tol: float, max_terms: int) -> float:
    # requires p >= m; coefficient reciprocals use the offset j = p - r
    z = -x * x
    hn = 0.5 * nu
    dens_a = (0.5, 0.5 + hn, 1.0 + hn)
    dens_b = (1.5, 1.0 + hn, 1.5 + hn)
    outer = KahanSum()
    for r in range(m + 1):
        hj = 0.5 * (p - r)
        c = 0.5 + nu - hj
        pre = (
            binomial(m, r)
            * (2.0 * x) ** r
            * pochhammer(1.0 + nu, r)
            / pochhammer(f, r)
        )
        nums_a = (0.5 + hn + 0.5 * r, 1.0 + hn + 0.5 * r)
        nums_b = (1.0 + hn + 0.5 * r, 1.5 + hn + 0.5 * r)
        inner = KahanSum()
        for s in range(p - r + 1):
            hs = 0.5 * s
            ra = rgamma(hs - hj + 0.5)
            ta = 0.0
            if ra != 0.0:
                ta = ra * _folded_series(
                    c, hs, nums_a + (0.5 + hj - hs,), dens_a, z, tol, max_terms
                )
            rb = rgamma(hs - hj)
            tb = 0.0
            if rb != 0.0:
                tb = (4.0 * x * (1.0 + nu + r) / (1.0 + nu)) * rb * _folded_series(
                    c + 0.5, hs, nums_b + (1.0 + hj - hs,), dens_b, z, tol, max_terms
                )
            inner.add(binomial(p - r, s) * (ta - tb))
        outer.add(pre * inner.total)
    return 2.0 ** (2.0 * nu - p) * gamma(1.0 + nu - p) * outer.total


def _sum_minus_plus(m: int, p: int, nu: float, f: float, x: float,
                    tol: float, max_terms: int) -> float:
    outer = KahanSum()
    for r in range(m + 1):
        pre = (
            binomial(m, r)
            * (-2.0 * x) ** r
            * pochhammer(1.0 + nu, r)
            / (pochhammer(f, r) * pochhammer(1.0 - nu + p, r) * pochhammer(1.0 + p, r))
        )
        inner = KahanSum()
        sign = 1.0
        for s in range(p + r + 1):
            cv = CoefficientSet("C", r, s, -nu, float(p)).value()
            ta = 0.0
            if cv != 0.0:
                ta = cv * _block_pfq(hyper_block(5, r, s, p, nu, x), tol, max_terms)
            dv = CoefficientSet("D", r, s, -nu, float(p)).value()
            tb = 0.0
            if dv != 0.0:
                tb = (
                    4.0 * x * (1.0 + nu + r)
                    / ((1.0 + nu) * (1.0 - nu + p + r) * (1.0 + p + r))
                ) * dv * _block_pfq(hyper_block(6, r, s, p, nu, x), tol, max_terms)
            inner.add(sign * binomial(p + r, s) * (ta - tb))
            sign = -sign
        outer.add(pre * inner.total)
    return (-2.0) ** p / float(math.factorial(p)) * outer.total


def _sum_minus_minus(m: int, p: int, nu: float, f: float, x: float,
                     tol: float, max_terms: int) -> float:
    # requires p >= m; coefficients are indexed with -r here
    outer = KahanSum()
    for r in range(m + 1):
        pre = (
            binomial(m, r)
            * (2.0 * x) ** r
            * pochhammer(1.0 + nu, r)
            / (pochhammer(f, r) * pochhammer(1.0 - nu - p, r))
        )
        inner = KahanSum()
        for s in range(p - r + 1):
            cv = CoefficientSet("C", -r, s, -nu, -float(p)).value()
            ta = 0.0
            if cv != 0.0:
                ta = cv * _block_pfq(hyper_block(7, r, s, p, nu, x), tol, max_terms)
            dv = CoefficientSet("D", -r, s, -nu, -float(p)).value()
            tb = 0.0
            if dv != 0.0:
                tb = (
                    4.0 * x * (1.0 + nu + r) / ((1.0 + nu) * (1.0 - nu - p + r))
                ) * dv * _block_pfq(hyper_block(8, r, s, p, nu, x), tol, max_terms)
            inner.add(binomial(p - r, s) * (ta - tb))
        outer.add(pre * inner.total)
    return 2.0 ** (-p) * outer.total


# ---------------------------------------------------------------------------
# m = 0 assembly from the shift-free displays
# ---------------------------------------------------------------------------

def s0_closed(spec: SumSpec, tol: float = DEFAULT_TOL,
              max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Shift-free (m = 0) closed form, using the contracted block lists."""
    spec.validate()
    if spec.m != 0:
        raise InvalidSumSpecError("s0_closed requires m = 0")
    p, nu, x = spec.p, spec.nu, spec.x
    z = -x * x
    hn, hp = 0.5 * nu, 0.5 * p
    if spec.sign_nu == PLUS and spec.sign_p == PLUS:
        c = 0.5 + nu + hp
        inner = KahanSum()
        sign = 1.0
        for s in range(p + 1):
            hs = 0.5 * s
            ra = rgamma(hs - hp + 0.5)
            ta = 0.0
            if ra != 0.0:
                ta = ra * _folded_series(
                    c, hs,
                    (0.5 + hn, 1.0 + hn, 0.5 + hp - hs),
                    (0.5, 0.5 + hn + hp, 1.0 + hn + hp),
                    z, tol, max_terms,
                )
            rb = rgamma(hs - hp)
            tb = 0.0
            if rb != 0.0:
                tb = (4.0 * x * (1.0 + nu) / (1.0 + nu + p)) * rb * _folded_series(
                    c + 0.5, hs,
                    (1.0 + hn, 1.5 + hn, 1.0 + hp - hs),
                    (1.5, 1.0 + hn + hp, 1.5 + hn + hp),
                    z, tol, max_terms,
                )
            inner.add(sign * binomial(p, s) * (ta - tb))
            sign = -sign
        return (-1.0) ** (p % 2) * 2.0 ** (2.0 * nu + p) * gamma(1.0 + nu) * inner.total
    if spec.sign_nu == PLUS:
        c = 0.5 + nu - hp
        inner = KahanSum()
        for s in range(p + 1):
            hs = 0.5 * s
            ra = rgamma(hs - hp + 0.5)
            ta = 0.0
            if ra != 0.0:
                ta = ra * _folded_series(
                    c, hs, (0.5 + hp - hs,), (0.5,), z, tol, max_terms
                )
            rb = rgamma(hs - hp)
            tb = 0.0
            if rb != 0.0:
                tb = 4.0 * x * rb * _folded_series(
                    c + 0.5, hs, (1.0 + hp - hs,), (1.5,), z, tol, max_terms
                )
            inner.add(binomial(p, s) * (ta - tb))
        return 2.0 ** (2.0 * nu - p) * gamma(1.0 + nu - p) * inner.total
    if spec.sign_p == PLUS:
        inner = KahanSum()
        sign = 1.0
        for s in range(p + 1):
            cv = CoefficientSet("C", 0, s, -nu, float(p)).value()
            ta = 0.0
            if cv != 0.0:
                ta = cv * _block_pfq(hyper_block_m0(5, s, p, nu, x), tol, max_terms)
            dv = CoefficientSet("D", 0, s, -nu, float(p)).value()
            tb = 0.0
            if dv != 0.0:
                tb = (4.0 * x / ((1.0 + p) * (1.0 - nu + p))) * dv * _block_pfq(
                    hyper_block_m0(6, s, p, nu, x), tol, max_terms
                )
            inner.add(sign * binomial(p, s) * (ta - tb))
            sign = -sign
        return (-2.0) ** p / float(math.factorial(p)) * inner.total
    inner = KahanSum()
    for s in range(p + 1):
        cv = CoefficientSet("C", 0, s, -nu, -float(p)).value()
        ta = 0.0
        if cv != 0.0:
            ta = cv * _block_pfq(hyper_block_m0(7, s, p, nu, x), tol, max_terms)
        dv = CoefficientSet("D", 0, s, -nu, -float(p)).value()
        tb = 0.0
        if dv != 0.0:
            tb = (4.0 * x / (1.0 - nu - p)) * dv * _block_pfq(
                hyper_block_m0(8, s, p, nu, x), tol, max_terms
            )
        inner.add(binomial(p, s) * (ta - tb))
    return 2.0 ** (-p) * inner.total


def sm_closed(spec: SumSpec, tol: float = DEFAULT_TOL,
              max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """General-m closed form; sign_p = '-' is valid only for p >= m."""
    spec.validate()
    if spec.sign_p != PLUS and spec.m > spec.p:
        raise InvalidSumSpecError(
            "the sign_p = '-' representation holds only for p >= m; use sm_split"
        )
    args = (spec.m, spec.p, spec.nu, spec.f, spec.x, tol, max_terms)
    if spec.sign_nu == PLUS and spec.sign_p == PLUS:
        return _sum_plus_plus(*args)
    if spec.sign_nu == PLUS:
        return _sum_plus_minus(*args)
    if spec.sign_p == PLUS:
        return _sum_minus_plus(*args)
    return _sum_minus_minus(*args)


# ---------------------------------------------------------------------------
# lemma route and the m > p split
# ---------------------------------------------------------------------------

def _inner_gauss_value(sign_nu: str, nu: float, joff: int, n: int) -> float:
    """2F1[-n, -n-nu; 1 +- nu + joff; -1] with joff of either sign."""
    if joff >= 0:
        variant = PLUS_NU_PLUS_J if sign_nu == PLUS else MINUS_NU_PLUS_J
        j = joff
    else:
        variant = PLUS_NU_MINUS_J if sign_nu == PLUS else MINUS_NU_MINUS_J
        j = -joff
    return kummer_special(KummerCase(variant=variant, n=n, nu=nu, j=j))


def lemma_sum(spec: SumSpec, tol: float = DEFAULT_TOL,
              max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Mixed representation: finite shift sum over r, series in n.

    sum_r C(m,r) x^r / ((f)_r (1 +- nu +- p)_r)
        * sum_n (-x)^n / n! (n+nu+1)_r 2F1[-n, -n-nu; 1 +- nu +- p + r; -1]

    with each terminating Gauss value supplied by the matching Kummer-type
    specialization (offset p + r, p - r or r - p depending on signs).
    """
    spec.validate()
    base = spec.denom_base
    joff_base = spec.signed_p
    total = KahanSum()
    for r in range(spec.m + 1):
        pre = binomial(spec.m, r) * spec.x ** r / (
            pochhammer(spec.f, r) * pochhammer(base, r)
        )
        inner = KahanSum()
        w = 1.0  # (-x)^n / n!
        small = 0
        converged = False
        for n in range(max_terms):
            t = w * pochhammer(n + spec.nu + 1.0, r) * _inner_gauss_value(
                spec.sign_nu, spec.nu, joff_base + r, n
            )
            inner.add(t)
            w *= -spec.x / (n + 1.0)
            if abs(t) <= tol * max(1.0, abs(inner.total)):
                small += 1
                if small >= SMALL_STREAK:
                    converged = True
                    break
            else:
                small = 0
        if not converged:
            raise ConvergenceError("lemma series did not converge within max_terms")
        total.add(pre * inner.total)
    return total.total


def sm_split(spec: SumSpec, tol: float = DEFAULT_TOL,
             max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Two-branch evaluation for sign_p = '-' with m > p.

    Shifts r <= p keep a non-negative offset p - r and use the minus-j
    summations; shifts r > p flip to offset r - p and use the plus-j ones.
    """
    spec.validate()
    if spec.sign_p == PLUS or spec.m <= spec.p:
        raise InvalidSumSpecError("sm_split applies to sign_p = '-' with m > p")
    base = spec.denom_base
    total = KahanSum()
    for r in range(spec.m + 1):
        pre = binomial(spec.m, r) * spec.x ** r * pochhammer(1.0 + spec.nu, r) / (
            pochhammer(spec.f, r) * pochhammer(base, r)
        )
        inner = KahanSum()
        w = 1.0  # (-x)^n / n! * (1+nu+r)_n / (1+nu)_n
        small = 0
        converged = False
        for n in range(max_terms):
            t = w * _inner_gauss_value(spec.sign_nu, spec.nu, r - spec.p, n)
            inner.add(t)
            w *= -spec.x * (1.0 + spec.nu + r + n) / ((n + 1.0) * (1.0 + spec.nu + n))
            if abs(t) <= tol * max(1.0, abs(inner.total)):
                small += 1
                if small >= SMALL_STREAK:
                    converged = True
                    break
            else:
                small = 0
        if not converged:
            raise ConvergenceError("split series did not converge within max_terms")
        total.add(pre * inner.total)
    return total.total


def bessel_special(nu: float, f: float, x: float,
                   tol: float = DEFAULT_TOL,
                   max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """m = 1, p = 0 contraction to 0F1 blocks:

    (1 + x/f) 0F1[; 1+nu; -x^2] - x^2 / ((1+nu) f) 0F1[; 2+nu; -x^2],

    equivalently G(1+nu) x^{-nu} ((1 + x/f) J_nu(2x) - (x/f) J_{nu+1}(2x)).
    """
    if nu <= -1.0:
        raise ValueError("nu must exceed -1")
    if f == 0.0 or (f < 0.0 and abs(f - round(f)) <= LATTICE_TOL * max(1.0, abs(f))):
        raise ValueError("f must avoid the non-positive integers")
    z = -x * x
    first = _block_pfq(PFQSpec((), (1.0 + nu,), z), tol, max_terms)
    second = _block_pfq(PFQSpec((), (2.0 + nu,), z), tol, max_terms)
    return (1.0 + x / f) * first - x * x / ((1.0 + nu) * f) * second


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def closed_route(spec: SumSpec) -> str:
    """Which closed evaluator covers this spec: 's0', 'sm' or 'split'."""
    if spec.m == 0:
        return ROUTE_S0
    if spec.sign_p != PLUS and spec.m > spec.p:
        return ROUTE_SPLIT
    return ROUTE_SM


def closed_sum(spec: SumSpec, tol: float = DEFAULT_TOL,
               max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Evaluate the series by its closed form, routed per closed_route."""
    route = closed_route(spec)
    if route == ROUTE_S0:
        return s0_closed(spec, tol, max_terms)
    if route == ROUTE_SPLIT:
        return sm_split(spec, tol, max_terms)
    return sm_closed(spec, tol, max_terms)
