"""
Integrals of the digamma kernel against E_p
===========================================

K(t) = 1/t - 1/(1 - e^-t) is the weight in psi(z) = ln z + int K(t) e^-zt dt.
Integrated against the exponential integrals E_p(t) it produces constants
that can be written through Stieltjes constants, sigma_k and zeta values.
Here the nested quadrature, the swapped single integral and the closed form
are put side by side.
"""

import math

from hyperstieltjes.expint import kernel, kernel_E_closed, kernel_E_integral, kernel_E_swap, kernel_laplace
from hyperstieltjes.specfun import digamma, riemann_zeta
from hyperstieltjes.stieltjes import gamma_stieltjes, sigma

print("K(0+) ->", kernel(1e-9), " K(1) =", kernel(1.0))

# the digamma representation itself
for z in (1.0, 3.5):
    print(f"psi({z}) = {float(digamma(z).value):.15f}  via kernel {float(kernel_laplace(z).value.value) + math.log(z):.15f}")

for p in (1, 2, 3):
    nested = kernel_E_integral(p).value
    swapped = kernel_E_swap(p).value
    closed = kernel_E_closed(p)
    print(f"p={p}: nested {float(nested.value):.13f} (+/- {nested.err:.0e})  swapped {float(swapped.value):.13f}"
          f"  closed {float(closed.value):.16f}")

# the p = 1 value in terms of classical constants
rhs = -gamma_stieltjes(1).value.value - sigma(1).value.value + riemann_zeta(2).value - 1
print("-gamma(1) - sigma_1 + zeta(2) - 1 =", float(rhs))
