"""
Generalized Stieltjes constants
===============================

gamma_{h^(r)}(m) is what remains of sum_{n<=x} h_n^(r) ln^m n / n^r after
the growing log terms are removed. Three independent routes compute it:
the limit itself (Euler-Maclaurin accelerated), a recurrence in r, and a
closed combination of zeta values, gamma_H(m) and gamma(m).
"""

from itertools import combinations

from hyperstieltjes.core import EvalContext
from hyperstieltjes.stieltjes import gamma_hr, gamma_stieltjes

ctx = EvalContext(tol=1e-25)   # switches to 32+ working digits

# the classical constants come out of the r = 0 case
for m in range(4):
    print(f"gamma({m}) = {gamma_stieltjes(m, ctx).value}")

# three routes per constant; they should agree to the working precision
for r in (1, 2, 3):
    for m in (0, 1, 2):
        routes = ["limit", "closed"] + (["recurrence"] if r >= 2 else [])
        vals = {meth: gamma_hr(r, m, ctx, meth).value.value for meth in routes}
        spread = max(abs(a - b) for a, b in combinations(vals.values(), 2))
        print(f"gamma_h{r}({m}) = {ctx.mp.nstr(vals['closed'], 22)}   route spread {float(spread):.1e}")

# gamma_h1(0) has the short form gamma^2/2 + zeta(2)/2
M = ctx.mp
print("gamma^2/2 + zeta(2)/2 =", M.nstr(M.euler**2 / 2 + M.zeta(2) / 2, 22))
