"""Truncated q-expansions and the specific level-1 / level-p modular forms
this package consumes: Delta, E_k, G_{2,p}, g_20 = E_8*Delta, the Hecke
operator T_p, and the Dirichlet coefficients of the degree-4 convolution.

Coefficients are exact rationals throughout (integers are stored with
denominator 1 for type uniformity); series are immutable after
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .exact_arith import bernoulli

__all__ = [
    "QSeries",
    "RankinCoeffs",
    "delta_qexp",
    "eisenstein_qexp",
    "g2p_qexp",
    "g20_qexp",
    "hecke_tp",
    "rankin_coeffs",
    "lemma1_local_check",
    "is_prime",
]

# Above this output length, integer series products switch from schoolbook
# convolution to Kronecker substitution (one bigint multiply).
_KRONECKER_CUTOFF = 600


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _schoolbook(a: Sequence[int], b: Sequence[int], n_out: int) -> list:
    out = [0] * (n_out + 1)
    for i, ai in enumerate(a):
        if ai and i <= n_out:
            hi = min(len(b), n_out + 1 - i)
            for j in range(hi):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def _kronecker(a: Sequence[int], b: Sequence[int], n_out: int) -> list:
    # Pack coefficients into one bigint each; Python's multiply does the rest.
    # Digit width covers the largest possible convolution coefficient, plus a
    # sign bit; negative digits are recovered balanced.
    max_a = max(abs(x) for x in a)
    max_b = max(abs(x) for x in b)
    if max_a == 0 or max_b == 0:
        return [0] * (n_out + 1)
    bound = max_a * max_b * min(len(a), len(b))
    k = bound.bit_length() + 2
    A = 0
    for x in reversed(a):
        A = (A << k) + x
    B = 0
    for x in reversed(b):
        B = (B << k) + x
    C = A * B
    half = 1 << (k - 1)
    full = 1 << k
    mask = full - 1
    out = []
    for _ in range(n_out + 1):
        d = C & mask
        if d >= half:
            d -= full
        out.append(d)
        C = (C - d) >> k
    return out


def _int_multiply(a: Sequence[int], b: Sequence[int], n_out: int) -> list:
    if n_out + 1 > _KRONECKER_CUTOFF and min(len(a), len(b)) > 2:
        return _kronecker(a, b, n_out)
    return _schoolbook(a, b, n_out)


class QSeries:
    """A q-expansion truncated at precision N: coefficients of q^0 .. q^N.

    Arithmetic between two series truncates to the smaller precision.
    """

    __slots__ = ("_coeffs", "precision")

    def __init__(self, coeffs: Sequence, precision: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if precision is None:
            precision = len(cs) - 1
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        if len(cs) < precision + 1:
            cs.extend([Fraction(0)] * (precision + 1 - len(cs)))
        self._coeffs = tuple(cs[: precision + 1])
        self.precision = precision

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.precision:
            raise IndexError(f"coefficient {n} beyond precision {self.precision}")
        return self._coeffs[n]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def integer_coeffs(self) -> list:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [int(c) for c in self._coeffs]

    def truncate(self, n: int) -> "QSeries":
        if n > self.precision:
            raise ValueError("cannot extend precision by truncation")
        return QSeries(self._coeffs[: n + 1], n)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return QSeries(
            [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)], n
        )

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return QSeries(
            [self._coeffs[i] - other._coeffs[i] for i in range(n + 1)], n
        )

    def __neg__(self):
        return QSeries([-c for c in self._coeffs], self.precision)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            n = min(self.precision, other.precision)
            if self.is_integral() and other.is_integral():
                prod = _int_multiply(
                    [int(c) for c in self._coeffs],
                    [int(c) for c in other._coeffs],
                    n,
                )
                return QSeries(prod, n)
            out = [Fraction(0)] * (n + 1)
            for i, ai in enumerate(self._coeffs[: n + 1]):
                if ai:
                    for j in range(min(other.precision, n - i) + 1):
                        bj = other._coeffs[j]
                        if bj:
                            out[i + j] += ai * bj
            return QSeries(out, n)
        if isinstance(other, (int, Fraction)):
            return QSeries([c * other for c in self._coeffs], self.precision)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return (
                self.precision == other.precision
                and self._coeffs == other._coeffs
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.precision, self._coeffs))

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if self.precision > 5 else ""
        return f"QSeries(N={self.precision}; [{head}{tail}])"


def _eta_coeffs(n: int) -> list:
    """prod_{m>=1} (1 - q^m) to precision n via the pentagonal number theorem."""
    out = [0] * (n + 1)
    out[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        s = -1 if k % 2 else 1
        if g1 <= n:
            out[g1] += s
        if g2 <= n:
            out[g2] += s
        k += 1
    return out


def _int_power(base: list, e: int, n_out: int) -> list:
    result = None
    p = base
    while e:
        if e & 1:
            result = p if result is None else _int_multiply(result, p, n_out)
        e >>= 1
        if e:
            p = _int_multiply(p, p, n_out)
    return result if result is not None else [1] + [0] * n_out


@lru_cache(maxsize=16)
def delta_qexp(N: int) -> QSeries:
    """Ramanujan's Delta = q prod (1-q^n)^24 to precision N.

    Coefficient of q^n is tau(n); the constant term is exactly 0.
    """
    if N < 1:
        raise ValueError("need N >= 1")
    eta24 = _int_power(_eta_coeffs(N - 1), 24, N - 1)
    return QSeries([0] + eta24, N)


def _divisor_power_sums(N: int, e: int) -> list:
    """sigma_e(n) for n = 0..N (index 0 unused, set to 0)."""
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        de = d**e
        for m in range(d, N + 1, d):
            out[m] += de
    return out


def eisenstein_qexp(k: int, N: int) -> QSeries:
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k < 4 or k % 2 != 0:
        raise ValueError("Eisenstein weight must be even and >= 4")
    if N < 0:
        raise ValueError("need N >= 0")
    alpha = -Fraction(2 * k) / bernoulli(k)
    sig = _divisor_power_sums(N, k - 1)
    return QSeries([Fraction(1)] + [alpha * sig[n] for n in range(1, N + 1)], N)


def g2p_qexp(p: int, N: int) -> QSeries:
    """The weight-2 level-p Eisenstein combination G_2(z) - p G_2(pz).

    Constant term (p-1)/24; coefficient of q^n is sum of divisors d of n
    with p not dividing d.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if N < 1:
        raise ValueError("need N >= 1")
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        if d % p == 0:
            continue
        for m in range(d, N + 1, d):
            out[m] += d
    coeffs = [Fraction(p - 1, 24)] + [Fraction(c) for c in out[1:]]
    return QSeries(coeffs, N)


@lru_cache(maxsize=16)
def g20_qexp(N: int) -> QSeries:
    """The normalized weight-20 cusp eigenform E_8 * Delta to precision N."""
    if N < 1:
        raise ValueError("need N >= 1")
    e8 = eisenstein_qexp(8, N).integer_coeffs()
    dl = delta_qexp(N).integer_coeffs()
    return QSeries(_int_multiply(e8, dl, N), N)


def hecke_tp(f: QSeries, p: int, k: int) -> QSeries:
    """Apply the level-1 Hecke operator T_p in weight k.

    Output coefficient n is a(np) + p^(k-1) a(n/p), the second term only
    when p | n; output precision is floor(N/p).
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    n_out = f.precision // p
    if n_out < 1:
        raise ValueError(
            f"insufficient precision {f.precision} for T_{p}"
        )
    pk = Fraction(p) ** (k - 1)
    out = []
    for n in range(n_out + 1):
        c = f[n * p]
        if n % p == 0:
            c += pk * f[n // p]
        out.append(c)
    return QSeries(out, n_out)


@dataclass(frozen=True)
class RankinCoeffs:
    """Dirichlet coefficients A(1)..A(N) of the degree-4 convolution of the
    weight-12 and weight-20 eigenforms: A(n) = sum_{d^2|n} d^30 tau(n/d^2) b(n/d^2).
    """

    precision: int
    values: Tuple[int, ...]  # index 0 unused

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.precision:
            raise IndexError(f"A({n}) beyond precision {self.precision}")
        return self.values[n]


@lru_cache(maxsize=16)
def rankin_coeffs(N: int) -> RankinCoeffs:
    if N < 1:
        raise ValueError("need N >= 1")
    tau = delta_qexp(N).integer_coeffs()
    b = g20_qexp(N).integer_coeffs()
    vals = [0] * (N + 1)
    for n in range(1, N + 1):
        acc = 0
        d = 1
        while d * d <= n:
            if n % (d * d) == 0:
                m = n // (d * d)
                acc += d**30 * tau[m] * b[m]
            d += 1
        vals[n] = acc
    return RankinCoeffs(N, tuple(vals))


# lemma1_local_check reads tau(p^k), b(p^k) straight from q-expansions up to
# this index and extends by the Hecke recursion beyond it (exact expansion to
# 5^8 coefficients is not practical; the recursion itself is a separately
# tested property).
_DIRECT_COEFF_CAP = 4096


def lemma1_local_check(p: int, order: int) -> bool:
    """Compare, to the given order in X = p^(-s), the coefficient series
    sum_k tau(p^k) b(p^k) X^k against the closed degree-4 local factor

        (1 - a a' b b' X^2) / prod (1 - a b X)(1 - a b' X)(1 - a' b X)(1 - a' b' X)

    with a + a' = tau(p), a a' = p^11, b + b' = b(p), b b' = p^19.  Both
    sides are expanded with exact integer symmetric-function arithmetic.
    """
    if p not in (2, 3, 5, 7):
        raise ValueError("p must be one of 2, 3, 5, 7")
    if not 0 <= order <= 10:
        raise ValueError("order must be in 0..10")
    n_direct = min(p**order, _DIRECT_COEFF_CAP)
    if n_direct < p and order >= 1:
        raise ValueError("insufficient q-expansion precision for tau(p), b(p)")
    tau_series = delta_qexp(max(n_direct, p)).integer_coeffs()
    b_series = g20_qexp(max(n_direct, p)).integer_coeffs()

    def prime_powers(series: list, pk_weight: int) -> list:
        out = [1]
        for k in range(1, order + 1):
            if p**k < len(series):
                out.append(series[p**k])
            else:
                # Hecke recursion a(p^(k+1)) = a(p) a(p^k) - p^(w-1) a(p^(k-1))
                out.append(out[1] * out[k - 1] - p**pk_weight * out[k - 2])
        return out

    taupk = prime_powers(tau_series, 11)
    bpk = prime_powers(b_series, 19)
    lhs = [taupk[k] * bpk[k] for k in range(order + 1)]

    tp, bp = tau_series[p], b_series[p]
    p11, p19, p30 = p**11, p**19, p**30
    # elementary symmetric functions of {ab, ab', a'b, a'b'}
    e1 = tp * bp
    e2 = p19 * (tp * tp - 2 * p11) + p11 * (bp * bp - 2 * p19) + 2 * p30
    e3 = p30 * tp * bp
    e4 = p30 * p30
    den = [1, -e1, e2, -e3, e4]
    num = [1, 0, -p30]
    rhs = []
    for k in range(order + 1):
        c = num[k] if k < len(num) else 0
        for j in range(1, min(k, 4) + 1):
            c -= den[j] * rhs[k - j]
        rhs.append(c)
    return lhs == rhs
