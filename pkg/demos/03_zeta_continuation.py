"""
The hyperharmonic zeta function past its abscissa
=================================================

sum_k h_k^(r) / k^s converges only for s > r. Writing h_k^(r) through
H_{k+r-1} and the asymptotic expansion of H_k turns it into Riemann zeta
values plus a remainder that stays analytic further left, so the function
can be evaluated below s = r, away from the double poles at 1..r and the
simple poles at 0, -1, -2, ...
"""

from hyperstieltjes.core import PoleError
from hyperstieltjes.hyperzeta import laurent_data, zh_continued, zh_series

# where both evaluations exist they coincide
for s in (2.5, 3.0, 4.0):
    print(f"s={s}: series {float(zh_series(2, s).value):.15f}  continued {float(zh_continued(2, s).value):.15f}")

# left of the abscissa only the continuation is available
for s in (1.5, 0.5, -0.5, -1.5):
    print(f"zeta_h2({s}) = {float(zh_continued(2, s, k=3).value):.15f}")

try:
    zh_continued(2, 2)
except PoleError as exc:
    print("s=2:", exc)

# near s = r the function is a2/h^2 + a1/h + sum (-1)^m gamma(m) h^m/m! + O(h^3)
data = laurent_data(2, 2)
for h in (0.1, 0.05, 0.025):
    z = zh_continued(2, 2 + h).value
    print(f"h={h}: remainder after the Laurent polynomial {float(z) - data.expansion(h):.3e}")
