"""Precision discipline for the numerical layer.

All extended-precision arithmetic runs on mpmath, but never through the
global `mpmath.mp` context: every entry point takes an explicit decimal
digit count D and works in a freshly cloned context, so identical inputs
and D give bit-identical results and concurrent calls cannot interfere.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp

from ..exact_arith import PiValue

MIN_DPS = 15


def context(dps: int):
    """A private mpmath context at the given decimal precision."""
    if dps < MIN_DPS:
        raise ValueError(f"working precision must be >= {MIN_DPS} digits")
    ctx = mp.clone()
    ctx.dps = dps
    return ctx


def round_to(dps: int, value):
    """Re-round a value to a D-digit context (the canonical return step)."""
    out = context(dps)
    return +out.convert(value)


def fraction_to_mpf(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / q.denominator


def pi_value_numeric(pv: PiValue, dps: int):
    """Evaluate an exact rational-times-pi-power sum to dps digits."""
    ctx = context(dps + 8)
    acc = ctx.zero
    for coeff, expo in pv.monomials:
        acc += fraction_to_mpf(ctx, coeff) * ctx.pi**expo
    return round_to(dps, acc)
