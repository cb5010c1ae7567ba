"""Tour of the special-function layer.

Every value the Casimir calculation depends on can be reached by at
least two independent routes; this script evaluates a handful of
landmark points each way and prints the agreement.
"""

import math

from zetacasimir import (
    gamma,
    hurwitz_zeta,
    polygamma,
    polylog,
    polylog_neg_int,
    polylog_series,
    riemann_zeta,
)

print("=== Gamma function (Lanczos, with reflection) ===")
print(f"Gamma(5)      = {gamma(5).real:.15f}   (expect 24)")
print(f"Gamma(1/2)^2  = {gamma(0.5).real ** 2:.15f}   (expect pi = {math.pi:.15f})")
print(f"Gamma(2.5+1j) = {gamma(2.5 + 1.0j):.12f}")

print()
print("=== Polylogarithm: three routes to the same number ===")
# inside the unit disk the defining series converges for any order and
# can be compared against the rational closed form
print(f"series     Li_{{-3}}(0.5)  = {polylog_series(-3.0, 0.5).real:.15f}")
print(f"closed     Li_{{-3}}(0.5)  = {polylog_neg_int(3, 0.5).real:.15f}   (expect 26)")
# on the unit circle the series diverges for negative order; the
# dispatcher routes through the closed form / contour instead
print(f"dispatcher Li_{{-3}}(-1)   = {polylog(-3.0, -1.0).real:.15f}   (expect 0.125)")

print()
print("=== Riemann zeta on both sides of the continuation ===")
print(f"zeta(2)  = {riemann_zeta(2.0).real:.12f}   (pi^2/6  = {math.pi**2 / 6:.12f})")
print(f"zeta(4)  = {riemann_zeta(4.0).real:.12f}   (pi^4/90 = {math.pi**4 / 90:.12f})")
print(f"zeta(-3) = {riemann_zeta(-3.0).real:.12f}   (1/120   = {1 / 120:.12f})")

print()
print("=== Hurwitz zeta and polygamma ===")
print(f"zeta(4, 1/2)   = {hurwitz_zeta(4.0, 0.5).real:.12f}"
      f"   (15 zeta(4) = {15 * math.pi**4 / 90:.12f})")
print(f"psi'''(1)      = {polygamma(3, 1.0):.12f}   (pi^4/15 = {math.pi**4 / 15:.12f})")
print(f"psi'''(1/2)    = {polygamma(3, 0.5):.12f}   (pi^4    = {math.pi**4:.12f})")

# the cotangent reflection identity ties polygamma back to elementary
# functions; this is the identity behind the plate-coefficient algebra
q = 0.25
c = 1.0 / math.tan(math.pi * q)
lhs = polygamma(3, q) + polygamma(3, 1.0 - q)
rhs = 2.0 * math.pi**4 * (1.0 + c * c) * (1.0 + 3.0 * c * c)
print(f"reflection residual at q=1/4: {abs(lhs - rhs):.3e}")
