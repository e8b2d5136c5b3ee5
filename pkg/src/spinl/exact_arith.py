"""Exact arithmetic substrate: rationals, Bernoulli numbers, zeta special
values, and the Gamma-ratio limits needed by the Eisenstein constant terms.

Everything in this module is exact.  Rationals are `fractions.Fraction`
(aliased as `Rational`); values of the form "rational times a power of pi"
are `PiValue` objects.  All functions are pure and all values immutable,
so concurrent use needs no locking.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Tuple

Rational = Fraction

__all__ = [
    "Rational",
    "PiValue",
    "bernoulli",
    "zeta_exact",
    "falling_ratio",
    "gamma_pole_ratio",
    "zeta_pole_over_gamma",
]


class PiValue:
    """A finite sum of monomials q * pi^e with q rational and e an integer.

    Monomials are kept sorted by strictly increasing exponent and zero
    coefficients are dropped; the empty sum represents exact zero.
    Distinct exponents are never merged into a float: consumers that
    expect a pure "rational times pi^e" call :meth:`as_monomial`, which
    raises if the value is not a single monomial.
    """

    __slots__ = ("_monomials",)

    def __init__(self, monomials: Iterable[Tuple[Rational, int]] = ()):
        acc: dict[int, Fraction] = {}
        for coeff, expo in monomials:
            e = int(expo)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(coeff)
        self._monomials = tuple(
            (acc[e], e) for e in sorted(acc) if acc[e] != 0
        )

    @classmethod
    def zero(cls) -> "PiValue":
        return cls()

    @classmethod
    def monomial(cls, coeff, exponent: int) -> "PiValue":
        return cls([(Fraction(coeff), exponent)])

    @classmethod
    def from_rational(cls, q) -> "PiValue":
        return cls([(Fraction(q), 0)])

    @property
    def monomials(self) -> Tuple[Tuple[Fraction, int], ...]:
        return self._monomials

    def is_zero(self) -> bool:
        return not self._monomials

    def is_monomial(self) -> bool:
        return len(self._monomials) == 1

    def as_monomial(self) -> Tuple[Fraction, int]:
        """Return (coefficient, pi exponent); zero is (0, 0).

        Raises ValueError when the value genuinely mixes pi powers, which
        downstream table emitters treat as an internal error.
        """
        if not self._monomials:
            return Fraction(0), 0
        if len(self._monomials) != 1:
            raise ValueError(f"not a single pi-monomial: {self!r}")
        return self._monomials[0]

    def __add__(self, other):
        if isinstance(other, PiValue):
            return PiValue(self._monomials + other._monomials)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, PiValue):
            return self + (-other)
        return NotImplemented

    def __neg__(self):
        return PiValue((-c, e) for c, e in self._monomials)

    def __mul__(self, other):
        if isinstance(other, PiValue):
            return PiValue(
                (c1 * c2, e1 + e2)
                for c1, e1 in self._monomials
                for c2, e2 in other._monomials
            )
        if isinstance(other, (int, Fraction)):
            return PiValue((c * other, e) for c, e in self._monomials)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiValue((c / other, e) for c, e in self._monomials)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, PiValue):
            return self._monomials == other._monomials
        return NotImplemented

    def __hash__(self):
        return hash(self._monomials)

    def __bool__(self):
        return bool(self._monomials)

    def __repr__(self):
        if not self._monomials:
            return "PiValue(0)"
        parts = [f"({c})*pi^{e}" for c, e in self._monomials]
        return "PiValue(" + " + ".join(parts) + ")"


_BERNOULLI_CACHE: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n in the convention B_1 = -1/2.

    Computed from the defining recurrence sum_{k<=n} C(n+1,k) B_k = 0
    with memoization, keeping the module closed under rationals.
    """
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    while len(_BERNOULLI_CACHE) <= n:
        m = len(_BERNOULLI_CACHE)
        if m > 1 and m % 2 == 1:
            _BERNOULLI_CACHE.append(Fraction(0))
            continue
        acc = sum(
            comb(m + 1, k) * _BERNOULLI_CACHE[k] for k in range(m)
        )
        _BERNOULLI_CACHE.append(Fraction(-1, m + 1) * acc)
    return _BERNOULLI_CACHE[n]


def zeta_exact(n: int) -> PiValue:
    """Exact value of zeta at an integer where a closed form exists.

    * n even >= 2:  zeta(n) = (-1)^(n/2+1) B_n (2 pi)^n / (2 n!), a single
      monomial with pi-exponent n;
    * n = 0: -1/2;
    * n negative even: exact 0 (trivial zeros);
    * n negative odd: -B_(1-n)/(1-n).

    Odd n >= 1 is rejected: n = 1 is the pole and odd n >= 3 has no exact
    closed form (the numerical module's concern).
    """
    if n >= 1 and n % 2 == 1:
        raise ValueError(f"zeta({n}) has no exact rational/pi closed form")
    if n >= 2:
        coeff = (
            Fraction((-1) ** (n // 2 + 1))
            * bernoulli(n)
            * Fraction(2) ** n
            / (2 * factorial(n))
        )
        return PiValue.monomial(coeff, n)
    if n == 0:
        return PiValue.from_rational(Fraction(-1, 2))
    if n % 2 == 0:
        return PiValue.zero()
    return PiValue.from_rational(-bernoulli(1 - n) / (1 - n))


def falling_ratio(a: int, i: int) -> Fraction:
    """The product prod_{j=1..i} (a - j), i.e. Gamma(a)/Gamma(a-i) continued
    to every integer a.

    The product formula is taken as the definition, so the value is 0
    exactly when some factor vanishes; poles of the denominator Gamma never
    need separate treatment.
    """
    if i < 0:
        raise ValueError("falling_ratio needs i >= 0")
    p = 1
    for j in range(1, i + 1):
        p *= a - j
    return Fraction(p)


def gamma_pole_ratio(x: int, y: int, c: int) -> Fraction:
    """lim_{eps->0} Gamma(x + c*eps) / Gamma(y + eps) with both arguments at
    nonpositive-integer poles.

    Near a pole, Gamma(-n + d) ~ (-1)^n / (n! d); the residues give
    (1/c) * (-1)^(x-y) * (-y)! / (-x)!.  The scaling c accounts for the
    numerator argument moving c times as fast along the limit direction.
    """
    if x > 0 or y > 0:
        raise ValueError("gamma_pole_ratio needs nonpositive integers")
    if c < 1:
        raise ValueError("gamma_pole_ratio needs c >= 1")
    sign = -1 if (x - y) % 2 else 1
    return Fraction(sign * factorial(-y), c * factorial(-x))


def zeta_pole_over_gamma(y: int, c: int) -> Fraction:
    """lim_{eps->0} zeta(1 + c*eps) / Gamma(y + eps) for y a nonpositive
    integer.

    zeta has residue 1 at its pole, so zeta(1 + c*eps) ~ 1/(c*eps), while
    1/Gamma(y + eps) ~ eps (-1)^(-y) (-y)!; the pole and the zero cancel to
    the finite value (-1)^(-y) (-y)! / c.
    """
    if y > 0:
        raise ValueError("zeta_pole_over_gamma needs a nonpositive integer")
    if c < 1:
        raise ValueError("zeta_pole_over_gamma needs c >= 1")
    return Fraction((-1) ** (-y) * factorial(-y), c)
