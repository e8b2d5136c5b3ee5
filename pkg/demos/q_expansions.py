#!/usr/bin/env python3
"""The modular forms behind the computation, as exact q-expansions.

Shows the discriminant form, the weight-2 level-2 Eisenstein combination,
the weight-20 eigenform, Hecke eigenvalue checks, and the degree-4
Dirichlet coefficients with the local-factor identity that makes them an
Euler product."""

from spinl import (
    delta_qexp,
    g20_qexp,
    g2p_qexp,
    hecke_tp,
    lemma1_local_check,
    rankin_coeffs,
)

d = delta_qexp(12)
print("Delta   :", " ".join(f"{int(d[n]):+d}q^{n}" for n in range(1, 7)), "...")

g = g2p_qexp(2, 8)
print("G_{2,2} :", g[0], "+", " ".join(f"{int(g[n])}q^{n}" for n in range(1, 7)), "...")

b = g20_qexp(8)
print("g20     :", " ".join(f"{int(b[n]):+d}q^{n}" for n in range(1, 5)), "...")

print()
print("Hecke action T_2 (both forms are eigenforms):")
t2d = hecke_tp(delta_qexp(40), 2, 12)
t2g = hecke_tp(g20_qexp(40), 2, 20)
print("  T_2 Delta / Delta =", t2d[1], " (tau(2))")
print("  T_2 g20  / g20   =", t2g[1], " (b(2))")
assert all(t2d[n] == -24 * d[n] for n in range(1, 13))

print()
A = rankin_coeffs(15)
print("degree-4 coefficients A(n) = sum_{d^2|n} d^30 tau(n/d^2) b(n/d^2):")
for n in (1, 2, 4, 12, 15):
    print(f"  A({n}) = {A[n]}")

print()
print("local-factor identity (coefficient series vs closed degree-4 Euler")
print("factor, exact integer expansion to order 8 in p^-s):")
for p in (2, 3, 5):
    print(f"  p={p}:", "holds" if lemma1_local_check(p, 8) else "FAILS")
