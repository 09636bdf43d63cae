"""
Hyperharmonic numbers
=====================

h_n^(r) is the r-fold iterated partial sum of 1/n. Exact values come from
the recursion; the closed form through harmonic numbers and its analytic
extension in n agree with them.
"""

from fractions import Fraction

import numpy as np

from hyperstieltjes.hyperharm import hh_analytic, hh_analytic_array, hh_closed, hh_exact, hh_step

# the first few rows of the triangle, as exact fractions
for r in range(4):
    print(f"r={r}:", [str(hh_exact(n, r)) for n in range(1, 6)])

# each row is the running sum of the previous one
assert hh_exact(6, 3) == sum(hh_exact(k, 2) for k in range(1, 7))

# one step up in r without summing
print("h_3^(2) by the step formula:", hh_step(3, 1), "=", hh_exact(3, 2))

# closed form at n = 50, r = 4 against the exact value
exact = hh_exact(50, 4)
print("h_50^(4):", float(exact), "closed form:", float(hh_closed(50, 4).value))

# between the integers the analytic extension interpolates smoothly;
# for r = 1 it is the harmonic number H_x = psi(x+1) + gamma
print("H_2.5 =", hh_analytic(2.5, 1))
x = np.linspace(1, 4, 7)
print("h_x^(2) on [1, 4]:", np.round(hh_analytic_array(x, 2), 6))
print("exact at 1..4:     ", [str(hh_exact(n, 2)) for n in (1, 2, 3, 4)])
assert hh_exact(3, 2) == Fraction(13, 3)
