"""Finite-part integrals from three independent directions.

The integral int_0^a exp(-x)/x^m dx diverges at the origin for m >= 1,
yet a finite value survives once the exactly known divergent terms are
removed.  This script evaluates that value three ways:

  1. the coefficient series (the library's primary path),
  2. the defining limit: integrate on [eps, a], subtract the divergent
     group, extrapolate eps -> 0,
  3. a contour integral around the circle |z| = a.

It then shows the classic trap: for the infinite-limit finite part,
substituting x -> x/b does NOT rescale the value; a logarithm appears.
"""

import math

from finitepart import (Exponential, fpi_contour_oracle, fpi_epsilon_oracle,
                        fpi_pole_finite, fpi_pole_infinite)

f = Exponential(1.0)

print("finite part of exp(-x)/x^m on (0, 1]")
print(f"{'m':>3} {'series':>22} {'eps-limit':>22} {'contour':>22}")
for m in (1, 2, 3, 4):
    series = fpi_pole_finite(f, m, 1.0).value
    eps = fpi_epsilon_oracle(f, m, 0.0, 1.0)
    contour = fpi_contour_oracle(f, m, 1.0)
    print(f"{m:>3} {series:>22.15g} {eps:>22.15g} {contour:>22.15g}")

print()
print("infinite upper limit: the value at b = 1 does not determine b = 2")
for m in (1, 2, 3):
    v1 = fpi_pole_infinite(Exponential(1.0), m).value
    v2 = fpi_pole_infinite(Exponential(2.0), m).value
    naive = 2 ** (m - 1) * v1                    # what substitution predicts
    missing = (-1.0) ** m * 2 ** (m - 1) * math.log(2.0) / math.factorial(m - 1)
    print(f"  m={m}:  actual={v2:+.12f}  substitution={naive:+.12f}  "
          f"difference={v2 - naive:+.12f}  (log term {missing:+.12f})")
