"""The exact-value engine.

Builds, from first principles, the constant terms of the two relevant
Eisenstein expansions, the holomorphic-projection Fourier coefficients
A_1(s), A_2(s), and the assembled critical values of

* L(s-9, Delta) L(s-10, Delta)          (coefficient of <Delta,Delta>),
* L(s, Delta x g20)                      (coefficient of <g20,g20>),
* their product, the spinor critical value  (coefficient of both norms),

each as an exact rational times a single power of pi, for s = 12..19.
No table is ever an input here; printed tables are regression fixtures in
the test suite only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Tuple

from .exact_arith import (
    PiValue,
    falling_ratio,
    gamma_pole_ratio,
    zeta_exact,
    zeta_pole_over_gamma,
)

__all__ = [
    "PeterssonFactors",
    "ProjectionCoeffs",
    "CriticalValueResult",
    "whittaker_closed_form",
    "c_constants",
    "projection_coeffs",
    "two_delta_product",
    "d_constants",
    "rankin_g20_value",
    "main_identity",
]


class PeterssonFactors(enum.Enum):
    """Which Petersson norms a critical-value coefficient multiplies."""

    DELTA_DELTA = "delta_delta"
    G20_G20 = "g20_g20"
    BOTH = "both"


@dataclass(frozen=True)
class ProjectionCoeffs:
    """First two Fourier coefficients of the holomorphic projection, each a
    single monomial with pi-exponent 2s-12, defined for s in 3..10."""

    s: int
    a1: PiValue
    a2: PiValue


@dataclass(frozen=True)
class CriticalValueResult:
    s: int
    rational: Fraction
    pi_exponent: int
    petersson_factors: PeterssonFactors

    @property
    def pi_value(self) -> PiValue:
        return PiValue.monomial(self.rational, self.pi_exponent)


def whittaker_closed_form(alpha: int, r: int) -> List[Fraction]:
    """Coefficients (ascending in y) of the degenerate Whittaker polynomial

        W(y, alpha, -r) = sum_{i=0..r} (-1)^i C(r,i) [Gamma(alpha)/Gamma(alpha-i)] y^(r-i),

    with the Gamma ratio continued through integer arguments as a falling
    product.  Entry [j] is the coefficient of y^j.
    """
    if r < 0:
        raise ValueError("need r >= 0")
    coeffs = [Fraction(0)] * (r + 1)
    for i in range(r + 1):
        coeffs[r - i] = Fraction((-1) ** i * comb(r, i)) * falling_ratio(alpha, i)
    return coeffs


def _check_s_range(s: int, lo: int, hi: int) -> None:
    if not lo <= s <= hi:
        raise ValueError(f"s must be in {lo}..{hi}, got {s}")


def c_constants(s: int) -> Tuple[PiValue, PiValue, PiValue, PiValue]:
    """Constant-term data (C0', C0'', C1, C2) of the weight-10 level-2
    Eisenstein expansion entering the <Delta,Delta> side, for s in 3..10.

    C0' = -2 pi^(2s-12) Gamma(2s-13) zeta(2s-13) / (Gamma(s-11) Gamma(s-1)),
    evaluated as a limit along s.  For s in 3..6 both Gammas sit at poles;
    at s = 7 the zeta factor is at its pole and cancels the 1/Gamma(s-11)
    zero; for s in 8..10 the value is 0.
    """
    _check_s_range(s, 3, 10)
    e = 2 * s - 12
    if s <= 6:
        zv, _ = zeta_exact(2 * s - 13).as_monomial()
        ratio = gamma_pole_ratio(2 * s - 13, s - 11, 2)
        c0p = PiValue.monomial(
            Fraction(-2) * zv * ratio / factorial(s - 2), e
        )
    elif s == 7:
        # Gamma(2s-13) = Gamma(1) = 1; zeta(1)-pole against the 1/Gamma zero.
        lim = zeta_pole_over_gamma(s - 11, 2)
        c0p = PiValue.monomial(Fraction(-2) * lim / factorial(s - 2), e)
    else:
        c0p = PiValue.zero()
    c0pp = (Fraction(2) - Fraction(2) ** (13 - 2 * s)) * zeta_exact(2 * s - 12)
    c1 = PiValue.monomial(Fraction(2), e)
    c2 = PiValue.monomial(Fraction(2) - Fraction(2) ** (2 * s - 12), e)
    return c0p, c0pp, c1, c2


def _whittaker_moment_sum(s: int, two_power: bool) -> Fraction:
    """sum_{i=0..11-s} (2^i) (-1)^i C(11-s, i) Gamma(11-i)/Gamma(s-1-i), the
    2^i factor only when two_power is set.  The Gamma ratio is the falling
    product Gamma(11-i)/Gamma(s-1-i) = falling_ratio(11-i, 12-s), which
    vanishes exactly when the denominator argument is a pole."""
    acc = Fraction(0)
    for i in range(0, 11 - s + 1):
        term = Fraction((-1) ** i * comb(11 - s, i)) * falling_ratio(11 - i, 12 - s)
        if two_power:
            term *= 2**i
        acc += term
    return acc


def projection_coeffs(s: int) -> ProjectionCoeffs:
    """Fourier coefficients A_1(s), A_2(s) of the holomorphic projection of
    G_{2,2}(z) (4 pi y)^(s-11) E_{10,2}(z, s-11), for s in 3..10."""
    _check_s_range(s, 3, 10)
    c0p, c0pp, c1, c2 = c_constants(s)
    f10 = factorial(10)
    s1 = _whittaker_moment_sum(s, two_power=False)
    s2 = _whittaker_moment_sum(s, two_power=True)
    a1 = (
        Fraction(factorial(12 - s), f10) * c0p
        + Fraction(factorial(s - 1), f10) * c0pp
        + (s1 / (24 * f10)) * c1
    )
    a2 = (
        (Fraction(factorial(12 - s)) * Fraction(2) ** (s - 2) / f10) * c0p
        + (Fraction(factorial(s - 1)) * Fraction(2) ** (11 - s) / f10) * c0pp
        + (s2 / f10) * c1
        + (Fraction(2) ** (11 - s) * s1 / (24 * f10)) * c2
    )
    for name, v in (("A1", a1), ("A2", a2)):
        coeff, expo = v.as_monomial()  # raises if pi powers mixed
        if coeff != 0 and expo != 2 * s - 12:
            raise AssertionError(f"{name}({s}) has pi-exponent {expo}")
    return ProjectionCoeffs(s, a1, a2)


def two_delta_product(s: int) -> CriticalValueResult:
    """Coefficient of <Delta,Delta> in L(s-9, Delta) L(s-10, Delta), a single
    monomial with pi-exponent 2s-19, for s in 12..19.

    Assembled as 3*2^13 pi^11 (232 A_1(s-9) - A_2(s-9)) over
    (1 + 3*2^(13-s) + 2^(31-2s)) Gamma(s-9); the 232/256 combination carries
    the trace evaluation <Delta(z), Delta(2z)> = -(1/256) <Delta, Delta>.
    """
    _check_s_range(s, 12, 19)
    pc = projection_coeffs(s - 9)
    combo = 232 * pc.a1 - pc.a2  # the /256 trace factor is absorbed: (3/2) 4^11 / 256 = 3*2^13
    num = Fraction(3 * 2**13) * combo
    den = (1 + 3 * Fraction(2) ** (13 - s) + Fraction(2) ** (31 - 2 * s)) * factorial(
        s - 10
    )
    value = num / den
    coeff, expo = value.as_monomial()
    return CriticalValueResult(
        s, coeff, expo + 11, PeterssonFactors.DELTA_DELTA
    )


def d_constants(s: int) -> Tuple[PiValue, PiValue]:
    """Constant-term data (D0', D0'') of the weight-8 level-1 Eisenstein
    expansion entering the <g20,g20> side, for s in 12..19.

    D0' = 2 (2 pi)^(2s-30) Gamma(2s-31) zeta(2s-31) / (Gamma(s-11) Gamma(s-19)),
    again as a limit along s: pole/pole for s in 12..15, zeta(1)-pole against
    the 1/Gamma zero at s = 16, and 0 for s in 17..19.  D0'' = 2 zeta(2s-30).
    """
    _check_s_range(s, 12, 19)
    e = 2 * s - 30
    d0pp = 2 * zeta_exact(2 * s - 30)
    if s <= 15:
        zv, _ = zeta_exact(2 * s - 31).as_monomial()
        ratio = gamma_pole_ratio(2 * s - 31, s - 19, 2)
        d0p = PiValue.monomial(
            2 * Fraction(2) ** e * zv * ratio / factorial(s - 12), e
        )
    elif s == 16:
        lim = zeta_pole_over_gamma(s - 19, 2)
        d0p = PiValue.monomial(
            2 * Fraction(2) ** e * lim / factorial(s - 12), e
        )
    else:
        d0p = PiValue.zero()
    return d0p, d0pp


def rankin_g20_value(s: int) -> CriticalValueResult:
    """Coefficient of <g20,g20> in the degree-4 value L(s, Delta x g20), a
    single monomial with pi-exponent 2s-11, for s in 12..19:

        (4 pi)^19 / (2 * 18!) * (D0'' + Gamma(31-s)/Gamma(s) * D0').
    """
    _check_s_range(s, 12, 19)
    d0p, d0pp = d_constants(s)
    combo = d0pp + Fraction(factorial(30 - s), factorial(s - 1)) * d0p
    value = (Fraction(4) ** 19 / (2 * factorial(18))) * combo
    coeff, expo = value.as_monomial()
    return CriticalValueResult(s, coeff, expo + 19, PeterssonFactors.G20_G20)


def main_identity(s: int) -> CriticalValueResult:
    """Coefficient of <Delta,Delta><g20,g20> in the spinor critical value at
    s in 12..19: the product of the two factor results (rationals multiply,
    pi-exponents add; the total exponent is 4s-30)."""
    _check_s_range(s, 12, 19)
    left = two_delta_product(s)
    right = rankin_g20_value(s)
    return CriticalValueResult(
        s,
        left.rational * right.rational,
        left.pi_exponent + right.pi_exponent,
        PeterssonFactors.BOTH,
    )
